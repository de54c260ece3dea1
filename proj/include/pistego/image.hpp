#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

namespace pistego {

enum class Channel : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

const char* channel_name(Channel c) noexcept;

/// One colour channel: row-major, top-left origin, one byte per pixel.
class Plane {
 public:
  Plane() = default;
  Plane(std::size_t width, std::size_t height, std::uint8_t fill = 0);
  /// Throws DimensionMismatch unless data.size() == width * height.
  Plane(std::size_t width, std::size_t height, std::vector<std::uint8_t> data);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  std::uint8_t at(std::size_t x, std::size_t y) const { return data_[y * width_ + x]; }
  std::uint8_t& at(std::size_t x, std::size_t y) { return data_[y * width_ + x]; }

  std::span<const std::uint8_t> pixels() const noexcept { return data_; }
  std::span<std::uint8_t> pixels() noexcept { return data_; }

  bool same_shape(const Plane& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const Plane&, const Plane&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Three equally sized planes. Immutable once built; embedding produces new images.
class RgbImage {
 public:
  RgbImage() = default;
  RgbImage(Plane red, Plane green, Plane blue);

  /// Builds from packed R,G,B triplets (row-major).
  static RgbImage from_interleaved(std::size_t width, std::size_t height,
                                   std::span<const std::uint8_t> rgb);
  std::vector<std::uint8_t> to_interleaved() const;

  std::size_t width() const noexcept { return red_.width(); }
  std::size_t height() const noexcept { return red_.height(); }
  std::size_t pixel_count() const noexcept { return red_.size(); }

  const Plane& red() const noexcept { return red_; }
  const Plane& green() const noexcept { return green_; }
  const Plane& blue() const noexcept { return blue_; }
  const Plane& plane(Channel c) const noexcept;

  friend bool operator==(const RgbImage&, const RgbImage&) = default;

 private:
  Plane red_;
  Plane green_;
  Plane blue_;
};

std::tuple<Plane, Plane, Plane> split_planes(const RgbImage& image);
RgbImage merge_planes(Plane r, Plane g, Plane b);

}  // namespace pistego
