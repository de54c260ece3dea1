#include "pistego/image.hpp"

#include <string>

#include "pistego/error.hpp"

namespace pistego {

const char* channel_name(Channel c) noexcept {
  switch (c) {
    case Channel::Red: return "Red";
    case Channel::Green: return "Green";
    case Channel::Blue: return "Blue";
  }
  return "?";
}

Plane::Plane(std::size_t width, std::size_t height, std::uint8_t fill)
    : width_(width), height_(height), data_(width * height, fill) {}

Plane::Plane(std::size_t width, std::size_t height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (data_.size() != width * height) {
    throw StegoError(ErrorKind::DimensionMismatch,
                     "plane data has " + std::to_string(data_.size()) + " bytes, expected " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
}

RgbImage::RgbImage(Plane red, Plane green, Plane blue)
    : red_(std::move(red)), green_(std::move(green)), blue_(std::move(blue)) {
  if (!red_.same_shape(green_) || !red_.same_shape(blue_)) {
    throw StegoError(ErrorKind::DimensionMismatch, "planes differ in dimensions");
  }
}

RgbImage RgbImage::from_interleaved(std::size_t width, std::size_t height,
                                    std::span<const std::uint8_t> rgb) {
  const std::size_t n = width * height;
  if (rgb.size() != 3 * n) {
    throw StegoError(ErrorKind::DimensionMismatch, "interleaved buffer size mismatch");
  }
  std::vector<std::uint8_t> r(n), g(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = rgb[3 * i];
    g[i] = rgb[3 * i + 1];
    b[i] = rgb[3 * i + 2];
  }
  return RgbImage(Plane(width, height, std::move(r)), Plane(width, height, std::move(g)),
                  Plane(width, height, std::move(b)));
}

std::vector<std::uint8_t> RgbImage::to_interleaved() const {
  const std::size_t n = pixel_count();
  std::vector<std::uint8_t> out(3 * n);
  const auto r = red_.pixels();
  const auto g = green_.pixels();
  const auto b = blue_.pixels();
  for (std::size_t i = 0; i < n; ++i) {
    out[3 * i] = r[i];
    out[3 * i + 1] = g[i];
    out[3 * i + 2] = b[i];
  }
  return out;
}

const Plane& RgbImage::plane(Channel c) const noexcept {
  switch (c) {
    case Channel::Red: return red_;
    case Channel::Green: return green_;
    case Channel::Blue: break;
  }
  return blue_;
}

std::tuple<Plane, Plane, Plane> split_planes(const RgbImage& image) {
  return {image.red(), image.green(), image.blue()};
}

RgbImage merge_planes(Plane r, Plane g, Plane b) {
  return RgbImage(std::move(r), std::move(g), std::move(b));
}

}  // namespace pistego
