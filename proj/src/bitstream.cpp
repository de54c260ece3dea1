#include "pistego/bitstream.hpp"

#include "pistego/error.hpp"

namespace pistego {

void BitWriter::push_bit(bool bit) {
  if ((bits_ & 7) == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= std::uint8_t(0x80u >> (bits_ & 7));
  ++bits_;
}

void BitWriter::push_bits(std::uint32_t value, int width) {
  for (int i = width - 1; i >= 0; --i) push_bit((value >> i) & 1u);
}

BitReader::BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_count)
    : bytes_(bytes), bit_count_(bit_count) {
  if (bit_count > bytes.size() * 8) {
    throw StegoError(ErrorKind::PreconditionViolation, "bit count exceeds buffer");
  }
}

bool BitReader::read_bit() {
  if (pos_ >= bit_count_) {
    throw StegoError(ErrorKind::TruncatedStream,
                     "bit stream exhausted after " + std::to_string(bit_count_) + " bits");
  }
  const bool bit = (bytes_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
  ++pos_;
  return bit;
}

std::uint32_t BitReader::read_bits(int width) {
  std::uint32_t v = 0;
  for (int i = 0; i < width; ++i) v = (v << 1) | std::uint32_t(read_bit());
  return v;
}

unsigned FramedPayload::bits(std::uint64_t index, int width) const noexcept {
  const std::uint64_t total = bit_length();
  unsigned v = 0;
  for (int i = 0; i < width; ++i) {
    const std::uint64_t at = index + std::uint64_t(i);
    v = (v << 1) | ((at < total && bit(at)) ? 1u : 0u);
  }
  return v;
}

FramedPayload frame_payload(std::span<const std::uint8_t> secret) {
  if (secret.size() > kMaxPayloadBytes) {
    throw StegoError(ErrorKind::PayloadTooLarge,
                     "payload of " + std::to_string(secret.size()) + " bytes exceeds the 32-bit length header");
  }
  FramedPayload p;
  p.bytes_.reserve(secret.size() + 4);
  const auto n = std::uint32_t(secret.size());
  p.bytes_.push_back(std::uint8_t(n >> 24));
  p.bytes_.push_back(std::uint8_t(n >> 16));
  p.bytes_.push_back(std::uint8_t(n >> 8));
  p.bytes_.push_back(std::uint8_t(n));
  p.bytes_.insert(p.bytes_.end(), secret.begin(), secret.end());
  return p;
}

std::vector<std::uint8_t> unframe(BitReader& reader) {
  const std::uint32_t length = reader.read_bits(32);
  if (std::uint64_t(length) * 8 > reader.remaining()) {
    throw StegoError(ErrorKind::TruncatedStream,
                     "length header claims " + std::to_string(length) + " bytes but only " +
                         std::to_string(reader.remaining()) + " bits follow");
  }
  std::vector<std::uint8_t> out(length);
  for (auto& byte : out) byte = std::uint8_t(reader.read_bits(8));
  return out;
}

}  // namespace pistego
