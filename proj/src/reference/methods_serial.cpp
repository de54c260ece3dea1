// Serial reference: the embedding and recovery loops written out directly,
// one pixel at a time, with no offsets tables or blocking.

#include <array>

#include "pistego/bitstream.hpp"
#include "pistego/codec.hpp"
#include "pistego/error.hpp"
#include "pistego/methods.hpp"

namespace pistego::reference {
namespace {

Plane& pick(std::array<Plane, 3>& planes, Channel c) { return planes[std::size_t(c)]; }

// Next k bits of the stream, zero-filled once it runs out.
unsigned take_group(BitReader& reader, int k) {
  unsigned v = 0;
  for (int i = 0; i < k; ++i) v = (v << 1) | ((reader.remaining() > 0 && reader.read_bit()) ? 1u : 0u);
  return v;
}

}  // namespace

std::uint64_t capacity(const RgbImage& cover, MethodId method) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < cover.pixel_count(); ++i) {
    const RoleAssignment role = role_for_pixel(method, i + 1);
    total += std::uint64_t(embed_widths(cover.plane(role.indicator).pixels()[i]).total());
  }
  return total;
}

EmbedResult embed(const RgbImage& cover, std::span<const std::uint8_t> secret, MethodId method,
                  EmbedOptions options) {
  const FramedPayload payload = frame_payload(secret);
  const std::uint64_t available = reference::capacity(cover, method);
  if (payload.bit_length() > available) throw CapacityError(payload.bit_length(), available);

  std::array<Plane, 3> planes{cover.red(), cover.green(), cover.blue()};
  BitReader reader(payload.bytes());
  EmbedResult result;
  result.bits_embedded = payload.bit_length();

  for (std::size_t i = 0; i < cover.pixel_count() && reader.remaining() > 0; ++i) {
    ++result.pixels_used;
    const RoleAssignment role = role_for_pixel(method, i + 1);
    const BitWidths widths = embed_widths(cover.plane(role.indicator).pixels()[i]);

    for (auto [channel, k] : {std::pair{role.channel1, widths.k1}, std::pair{role.channel2, widths.k2}}) {
      if (reader.remaining() == 0) break;
      const std::uint8_t original = cover.plane(channel).pixels()[i];
      const BitGroup group{std::uint8_t(take_group(reader, k)), k};
      const std::uint8_t substituted = lsb_substitute(original, group, k);
      std::uint8_t value = substituted;
      if (options.opap) {
        value = opap_adjust(original, substituted, k);
        if (value != substituted) ++result.opap_adjustments;
      }
      pick(planes, channel).pixels()[i] = value;
    }
  }

  result.stego = merge_planes(std::move(planes[0]), std::move(planes[1]), std::move(planes[2]));
  return result;
}

std::vector<std::uint8_t> extract(const RgbImage& stego, MethodId method) {
  BitWriter stream;
  for (std::size_t i = 0; i < stego.pixel_count(); ++i) {
    const RoleAssignment role = role_for_pixel(method, i + 1);
    const BitWidths widths = embed_widths(stego.plane(role.indicator).pixels()[i]);
    stream.push_bits(lsb_read(stego.plane(role.channel1).pixels()[i], widths.k1).value, widths.k1);
    stream.push_bits(lsb_read(stego.plane(role.channel2).pixels()[i], widths.k2).value, widths.k2);
  }
  BitReader reader(stream.bytes(), stream.bit_count());
  return unframe(reader);
}

}  // namespace pistego::reference
