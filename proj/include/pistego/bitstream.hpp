#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace pistego {

/// Appends bits MSB-first into packed bytes.
class BitWriter {
 public:
  void push_bit(bool bit);
  /// Appends the low `width` bits of value, most significant first.
  void push_bits(std::uint32_t value, int width);

  std::size_t bit_count() const noexcept { return bits_; }
  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
  std::vector<std::uint8_t> take_bytes() && { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bits_ = 0;
};

/// Sequential MSB-first reader over packed bytes. Reading past the end
/// throws TruncatedStream.
class BitReader {
 public:
  BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_count);
  explicit BitReader(std::span<const std::uint8_t> bytes)
      : BitReader(bytes, bytes.size() * 8) {}

  std::size_t remaining() const noexcept { return bit_count_ - pos_; }
  std::size_t position() const noexcept { return pos_; }

  bool read_bit();
  std::uint32_t read_bits(int width);

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t bit_count_;
  std::size_t pos_ = 0;
};

inline constexpr std::size_t kLengthHeaderBits = 32;
inline constexpr std::uint64_t kMaxPayloadBytes = std::numeric_limits<std::uint32_t>::max();

/// Secret bytes behind a 32-bit big-endian byte count, viewed as one
/// MSB-first bit stream (header first).
class FramedPayload {
 public:
  std::uint32_t length_header() const noexcept { return static_cast<std::uint32_t>(body_size()); }
  std::size_t body_size() const noexcept { return bytes_.size() - 4; }
  std::span<const std::uint8_t> body() const noexcept {
    return std::span<const std::uint8_t>(bytes_).subspan(4);
  }
  /// Header followed by body.
  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
  std::uint64_t bit_length() const noexcept { return std::uint64_t(bytes_.size()) * 8; }

  bool bit(std::uint64_t index) const noexcept {
    return (bytes_[index >> 3] >> (7 - (index & 7))) & 1u;
  }
  /// `width` bits starting at `index`, MSB-first; positions past the end read as 0.
  unsigned bits(std::uint64_t index, int width) const noexcept;

  friend FramedPayload frame_payload(std::span<const std::uint8_t> secret);

 private:
  std::vector<std::uint8_t> bytes_;
};

/// Throws PayloadTooLarge when secret has 2^32 bytes or more.
FramedPayload frame_payload(std::span<const std::uint8_t> secret);

/// Reads the 32-bit length L then exactly 8*L bits; anything after is left
/// unread. Throws TruncatedStream if the reader runs dry first.
std::vector<std::uint8_t> unframe(BitReader& reader);

}  // namespace pistego
