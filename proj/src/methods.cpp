#include "pistego/methods.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cctype>

#include "pistego/bitstream.hpp"
#include "pistego/codec.hpp"
#include "pistego/error.hpp"

namespace pistego {

std::string MethodId::label() const {
  switch (tag_) {
    case Tag::Method1: return "1";
    case Tag::Method3: return "3";
    case Tag::Method2: break;
  }
  return std::string("2") + channel_name(*indicator_)[0];
}

std::optional<MethodId> MethodId::parse(const std::string& label) {
  std::string s;
  for (char c : label) s.push_back(char(std::toupper(static_cast<unsigned char>(c))));
  if (s == "1") return method1();
  if (s == "3") return method3();
  if (s == "2R") return method2(Channel::Red);
  if (s == "2G") return method2(Channel::Green);
  if (s == "2B") return method2(Channel::Blue);
  return std::nullopt;
}

RoleAssignment role_for_pixel(MethodId method, std::uint64_t pixel_ordinal) {
  if (pixel_ordinal == 0) {
    throw StegoError(ErrorKind::PreconditionViolation, "pixel ordinals start at 1");
  }
  return detail::role_unchecked(method, pixel_ordinal);
}

namespace {

// Pixels per work unit. Each block is walked sequentially from its own
// starting bit offset, so the parallel result matches the serial traversal.
constexpr std::size_t kBlockPixels = 4096;

struct PlaneViews {
  std::array<std::span<const std::uint8_t>, 3> p;

  explicit PlaneViews(const RgbImage& img)
      : p{img.red().pixels(), img.green().pixels(), img.blue().pixels()} {}

  std::uint8_t operator()(Channel c, std::size_t i) const { return p[std::size_t(c)][i]; }
};

int pixel_bits(const PlaneViews& planes, MethodId method, std::size_t index) {
  const RoleAssignment role = detail::role_unchecked(method, index + 1);
  return embed_widths(planes(role.indicator, index)).total();
}

/// Bit offset at which each block starts, plus the total in the last slot.
std::vector<std::uint64_t> block_offsets(const RgbImage& image, MethodId method) {
  const PlaneViews planes(image);
  const std::size_t n = image.pixel_count();
  const std::size_t blocks = (n + kBlockPixels - 1) / kBlockPixels;
  std::vector<std::uint64_t> offsets(blocks + 1, 0);

#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < std::int64_t(blocks); ++b) {
    const std::size_t begin = std::size_t(b) * kBlockPixels;
    const std::size_t end = std::min(n, begin + kBlockPixels);
    std::uint64_t sum = 0;
    for (std::size_t i = begin; i < end; ++i) sum += std::uint64_t(pixel_bits(planes, method, i));
    offsets[std::size_t(b) + 1] = sum;
  }
  for (std::size_t b = 1; b <= blocks; ++b) offsets[b] += offsets[b - 1];
  return offsets;
}

class BitSink {
 public:
  BitSink(std::span<std::uint8_t> out, std::uint64_t begin, std::uint64_t end)
      : out_(out), first_byte_(begin >> 3), last_byte_(end == 0 ? 0 : (end - 1) >> 3) {}

  void put(std::uint64_t index, bool bit) {
    if (!bit) return;
    const std::uint64_t q = index >> 3;
    const auto mask = std::uint8_t(0x80u >> (index & 7));
    std::uint8_t& target = out_[std::size_t(q)];
    if (q == first_byte_ || q == last_byte_) {
      // Shared with the neighbouring block.
#pragma omp atomic
      target |= mask;
    } else {
      target |= mask;
    }
  }

 private:
  std::span<std::uint8_t> out_;
  std::uint64_t first_byte_;
  std::uint64_t last_byte_;
};

// Reads just the 32-bit length header by walking pixels from the start.
std::uint32_t read_length_header(const RgbImage& stego, MethodId method) {
  const PlaneViews planes(stego);
  std::uint64_t got = 0;
  std::uint32_t header = 0;
  for (std::size_t i = 0; i < stego.pixel_count() && got < kLengthHeaderBits; ++i) {
    const RoleAssignment role = detail::role_unchecked(method, i + 1);
    const BitWidths w = embed_widths(planes(role.indicator, i));
    const std::array<std::pair<Channel, int>, 2> groups{{{role.channel1, w.k1}, {role.channel2, w.k2}}};
    for (const auto& [ch, k] : groups) {
      const unsigned bits = planes(ch, i) & ((1u << k) - 1u);
      for (int j = k - 1; j >= 0 && got < kLengthHeaderBits; --j, ++got) {
        header = (header << 1) | ((bits >> j) & 1u);
      }
    }
  }
  if (got < kLengthHeaderBits) {
    throw StegoError(ErrorKind::TruncatedStream, "image too small to hold a length header");
  }
  return header;
}

}  // namespace

std::uint64_t capacity(const RgbImage& cover, MethodId method) {
  const PlaneViews planes(cover);
  const std::int64_t n = std::int64_t(cover.pixel_count());
  std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) total += std::uint64_t(pixel_bits(planes, method, std::size_t(i)));
  return total;
}

std::optional<std::uint64_t> max_secret_bytes(const RgbImage& cover, MethodId method) {
  const std::uint64_t cap = capacity(cover, method);
  if (cap < kLengthHeaderBits) return std::nullopt;
  return std::min<std::uint64_t>((cap - kLengthHeaderBits) / 8, kMaxPayloadBytes);
}

EmbedResult embed(const RgbImage& cover, std::span<const std::uint8_t> secret, MethodId method,
                  EmbedOptions options) {
  const FramedPayload payload = frame_payload(secret);
  const std::uint64_t total_bits = payload.bit_length();
  const std::vector<std::uint64_t> offsets = block_offsets(cover, method);
  if (total_bits > offsets.back()) throw CapacityError(total_bits, offsets.back());

  auto [red, green, blue] = split_planes(cover);
  const std::array<std::span<std::uint8_t>, 3> out{red.pixels(), green.pixels(), blue.pixels()};
  const PlaneViews in(cover);
  const std::size_t n = cover.pixel_count();
  const std::int64_t blocks = std::int64_t(offsets.size() - 1);
  const bool opap = options.opap;

  std::uint64_t pixels_used = 0;
  std::uint64_t adjustments = 0;

#pragma omp parallel for reduction(+ : pixels_used, adjustments) schedule(dynamic, 4)
  for (std::int64_t b = 0; b < blocks; ++b) {
    std::uint64_t pos = offsets[std::size_t(b)];
    if (pos >= total_bits) continue;
    const std::size_t begin = std::size_t(b) * kBlockPixels;
    const std::size_t end = std::min(n, begin + kBlockPixels);
    for (std::size_t i = begin; i < end && pos < total_bits; ++i) {
      ++pixels_used;
      const RoleAssignment role = detail::role_unchecked(method, i + 1);
      const BitWidths w = embed_widths(in(role.indicator, i));
      const std::array<std::pair<Channel, int>, 2> groups{{{role.channel1, w.k1}, {role.channel2, w.k2}}};
      for (const auto& [ch, k] : groups) {
        if (pos >= total_bits) break;
        const std::uint8_t original = in(ch, i);
        const std::uint8_t substituted = detail::substitute(original, payload.bits(pos, k), k);
        std::uint8_t value = substituted;
        if (opap) {
          value = detail::opap(original, substituted, k);
          adjustments += value != substituted;
        }
        out[std::size_t(ch)][i] = value;
        pos += std::uint64_t(k);
      }
    }
  }

  return EmbedResult{merge_planes(std::move(red), std::move(green), std::move(blue)), total_bits,
                     pixels_used, adjustments};
}

std::vector<std::uint8_t> extract(const RgbImage& stego, MethodId method) {
  const std::vector<std::uint64_t> offsets = block_offsets(stego, method);
  const std::uint64_t available = offsets.back();
  const std::uint32_t length = read_length_header(stego, method);
  const std::uint64_t total_bits = kLengthHeaderBits + std::uint64_t(length) * 8;
  if (total_bits > available) {
    throw StegoError(ErrorKind::TruncatedStream,
                     "length header claims " + std::to_string(length) + " bytes but the image holds only " +
                         std::to_string(available) + " bits");
  }

  std::vector<std::uint8_t> framed(std::size_t(total_bits / 8), 0);
  const PlaneViews in(stego);
  const std::size_t n = stego.pixel_count();
  const std::int64_t blocks = std::int64_t(offsets.size() - 1);

#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t b = 0; b < blocks; ++b) {
    std::uint64_t pos = offsets[std::size_t(b)];
    if (pos >= total_bits) continue;
    BitSink sink(framed, pos, std::min(offsets[std::size_t(b) + 1], total_bits));
    const std::size_t begin = std::size_t(b) * kBlockPixels;
    const std::size_t end = std::min(n, begin + kBlockPixels);
    for (std::size_t i = begin; i < end && pos < total_bits; ++i) {
      const RoleAssignment role = detail::role_unchecked(method, i + 1);
      const BitWidths w = embed_widths(in(role.indicator, i));
      const std::array<std::pair<Channel, int>, 2> groups{{{role.channel1, w.k1}, {role.channel2, w.k2}}};
      for (const auto& [ch, k] : groups) {
        const unsigned bits = in(ch, i);
        for (int j = k - 1; j >= 0 && pos < total_bits; --j, ++pos) sink.put(pos, (bits >> j) & 1u);
      }
    }
  }

  return std::vector<std::uint8_t>(framed.begin() + 4, framed.end());
}

}  // namespace pistego
