#include "pistego/codec.hpp"

#include "pistego/error.hpp"

namespace pistego {
namespace {

void check_width(int k) {
  if (k < 1 || k > 3) {
    throw StegoError(ErrorKind::BadGroupLength, "group width must be 1..3, got " + std::to_string(k));
  }
}

}  // namespace

BitGroup BitGroup::from_string(std::string_view bits) {
  check_width(int(bits.size()));
  BitGroup g{0, int(bits.size())};
  for (char c : bits) {
    if (c != '0' && c != '1') throw StegoError(ErrorKind::BadGroupLength, "group must be 0/1 digits");
    g.value = std::uint8_t((g.value << 1) | (c - '0'));
  }
  return g;
}

std::string BitGroup::to_string() const {
  std::string s(std::size_t(width), '0');
  for (int i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1u) s[std::size_t(i)] = '1';
  }
  return s;
}

std::uint8_t lsb_substitute(std::uint8_t value, BitGroup group, int k) {
  check_width(k);
  if (group.width != k || group.value >= (1u << k)) {
    throw StegoError(ErrorKind::BadGroupLength,
                     "group has " + std::to_string(group.width) + " bits, expected " + std::to_string(k));
  }
  return detail::substitute(value, group.value, k);
}

BitGroup lsb_read(std::uint8_t value, int k) {
  check_width(k);
  return {std::uint8_t(value & ((1u << k) - 1u)), k};
}

std::uint8_t opap_adjust(std::uint8_t original, std::uint8_t substituted, int k) {
  check_width(k);
  if ((original >> k) != (substituted >> k)) {
    throw StegoError(ErrorKind::PreconditionViolation,
                     "substituted byte differs from original above the low " + std::to_string(k) + " bits");
  }
  return detail::opap(original, substituted, k);
}

}  // namespace pistego
