#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pistego/image.hpp"

namespace pistego {

/// Which embedding method to run. Method 2 carries its user-selected
/// indicator channel; the other two never do.
class MethodId {
 public:
  enum class Tag : std::uint8_t { Method1 = 1, Method2 = 2, Method3 = 3 };

  static constexpr MethodId method1() noexcept { return MethodId(Tag::Method1, std::nullopt); }
  static constexpr MethodId method2(Channel indicator) noexcept { return MethodId(Tag::Method2, indicator); }
  static constexpr MethodId method3() noexcept { return MethodId(Tag::Method3, std::nullopt); }

  constexpr Tag tag() const noexcept { return tag_; }
  constexpr std::optional<Channel> indicator() const noexcept { return indicator_; }

  /// "1", "2R", "2G", "2B", "3".
  std::string label() const;
  /// Inverse of label(); also accepts lower case. Returns nullopt on junk.
  static std::optional<MethodId> parse(const std::string& label);

  friend constexpr bool operator==(MethodId, MethodId) = default;

 private:
  constexpr MethodId(Tag tag, std::optional<Channel> indicator) noexcept
      : tag_(tag), indicator_(indicator) {}

  Tag tag_;
  std::optional<Channel> indicator_;
};

struct RoleAssignment {
  Channel indicator;
  Channel channel1;
  Channel channel2;

  friend constexpr bool operator==(RoleAssignment, RoleAssignment) = default;
};

namespace detail {

constexpr RoleAssignment role_of(Channel indicator) noexcept {
  switch (indicator) {
    case Channel::Red: return {Channel::Red, Channel::Green, Channel::Blue};
    case Channel::Green: return {Channel::Green, Channel::Red, Channel::Blue};
    case Channel::Blue: break;
  }
  return {Channel::Blue, Channel::Red, Channel::Green};
}

// ordinal is 1-based; no validation.
constexpr RoleAssignment role_unchecked(MethodId method, std::uint64_t ordinal) noexcept {
  switch (method.tag()) {
    case MethodId::Tag::Method1: return role_of(Channel::Red);
    case MethodId::Tag::Method2: return role_of(*method.indicator());
    case MethodId::Tag::Method3: break;
  }
  switch (ordinal % 3) {
    case 1: return role_of(Channel::Red);
    case 2: return role_of(Channel::Green);
    default: return role_of(Channel::Blue);
  }
}

}  // namespace detail

/// Role of each channel at the 1-based pixel ordinal (row-major traversal).
/// Throws PreconditionViolation for ordinal 0.
RoleAssignment role_for_pixel(MethodId method, std::uint64_t pixel_ordinal);

/// Exact number of bits embed can place in cover, header included.
std::uint64_t capacity(const RgbImage& cover, MethodId method);

/// Largest secret (in bytes) that fits, or nullopt when not even the header does.
std::optional<std::uint64_t> max_secret_bytes(const RgbImage& cover, MethodId method);

struct EmbedOptions {
  bool opap = true;
};

struct EmbedResult {
  RgbImage stego;
  std::uint64_t bits_embedded = 0;
  std::uint64_t pixels_used = 0;
  /// Channel bytes that the pixel adjustment moved by +-2^k.
  std::uint64_t opap_adjustments = 0;
};

/// Hides secret in cover. Throws CapacityError when the framed payload
/// exceeds capacity(cover, method).
EmbedResult embed(const RgbImage& cover, std::span<const std::uint8_t> secret,
                  MethodId method, EmbedOptions options = {});

/// Blind recovery from the stego image alone. Throws TruncatedStream when the
/// embedded length header claims more bits than the image holds.
std::vector<std::uint8_t> extract(const RgbImage& stego, MethodId method);

/// Straight-line single-threaded implementations kept as the oracle for the
/// parallel kernels above. Same contracts, same outputs.
namespace reference {

std::uint64_t capacity(const RgbImage& cover, MethodId method);
EmbedResult embed(const RgbImage& cover, std::span<const std::uint8_t> secret,
                  MethodId method, EmbedOptions options = {});
std::vector<std::uint8_t> extract(const RgbImage& stego, MethodId method);

}  // namespace reference
}  // namespace pistego
