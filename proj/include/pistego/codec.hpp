#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pistego {

/// The indicator byte's two low bits and their Excess-3 value.
struct IndicatorCode {
  std::uint8_t b1;  // next-to-LSB
  std::uint8_t b0;  // LSB

  /// Total payload bits carried by the pixel: 3..6.
  constexpr int n() const noexcept { return 2 * b1 + b0 + 3; }
};

constexpr IndicatorCode decode_indicator(std::uint8_t indicator) noexcept {
  return {static_cast<std::uint8_t>((indicator >> 1) & 1u),
          static_cast<std::uint8_t>(indicator & 1u)};
}

struct BitWidths {
  int k1;  // channel-1
  int k2;  // channel-2

  constexpr int total() const noexcept { return k1 + k2; }
  friend constexpr bool operator==(BitWidths, BitWidths) = default;
};

/// Widths per the indicator table: 00 -> (1,2), 01 -> (2,2), 10 -> (2,3), 11 -> (3,3).
/// Channel-2 takes the extra bit when n is odd.
constexpr BitWidths embed_widths(std::uint8_t indicator) noexcept {
  const int n = decode_indicator(indicator).n();
  return {n / 2, n - n / 2};
}

/// Up to three bits, MSB-first: the first bit of the group is the most
/// significant of the replaced bits.
struct BitGroup {
  std::uint8_t value = 0;
  int width = 0;

  /// Parses "101"-style strings. Throws BadGroupLength on bad input.
  static BitGroup from_string(std::string_view bits);
  std::string to_string() const;

  friend constexpr bool operator==(BitGroup, BitGroup) = default;
};

/// Replaces the k low bits of value with group. Throws BadGroupLength when
/// group.width != k or k is outside 1..3.
std::uint8_t lsb_substitute(std::uint8_t value, BitGroup group, int k);

/// The k low bits of value, as a group. Throws BadGroupLength for k outside 1..3.
BitGroup lsb_read(std::uint8_t value, int k);

/// Optimal pixel adjustment after k-bit substitution: moves substituted by
/// +-2^k when that strictly shrinks the error and stays inside [0,255].
/// The k low bits are never touched. Throws PreconditionViolation when
/// original and substituted differ above bit k.
std::uint8_t opap_adjust(std::uint8_t original, std::uint8_t substituted, int k);

namespace detail {

// Unchecked forms used by the image kernels; callers guarantee 1 <= k <= 3
// and bits < 2^k.
constexpr std::uint8_t substitute(std::uint8_t value, unsigned bits, int k) noexcept {
  const unsigned mask = (1u << k) - 1u;
  return static_cast<std::uint8_t>((value & ~mask) | (bits & mask));
}

constexpr std::uint8_t opap(std::uint8_t original, std::uint8_t substituted, int k) noexcept {
  const int step = 1 << k;
  const int half = step >> 1;
  const int e = int(substituted) - int(original);
  if (e > half && substituted >= step) return static_cast<std::uint8_t>(substituted - step);
  if (e < -half && substituted <= 255 - step) return static_cast<std::uint8_t>(substituted + step);
  return substituted;
}

}  // namespace detail
}  // namespace pistego
