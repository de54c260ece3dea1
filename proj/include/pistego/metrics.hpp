#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "pistego/image.hpp"
#include "pistego/methods.hpp"

namespace pistego {

using Histogram = std::array<std::uint64_t, 256>;

/// Mean squared difference; exact integer sum, one division.
/// Throws DimensionMismatch.
double mse(const Plane& a, const Plane& b);
/// Sum of squared differences (the numerator of mse).
std::uint64_t squared_error(const Plane& a, const Plane& b);

/// 10*log10(255^2 / mse) in dB; +infinity for mse == 0.
double psnr(double mse_value);

/// Throws EmptyImage when width*height == 0.
double bpp(std::uint64_t bits_embedded, std::size_t width, std::size_t height);

Histogram histogram(const Plane& p);

struct ChannelReport {
  Channel channel;
  double mse;
  double psnr_db;
};

struct StegoReport {
  std::array<ChannelReport, 3> per_channel;  // R, G, B
  double bpp;
  std::uint64_t bits_embedded;
  std::size_t width;
  std::size_t height;
};

StegoReport full_report(const RgbImage& cover, const RgbImage& stego, std::uint64_t bits_embedded);
StegoReport full_report(const RgbImage& cover, const EmbedResult& result);

namespace reference {

std::uint64_t squared_error(const Plane& a, const Plane& b);
Histogram histogram(const Plane& p);

}  // namespace reference
}  // namespace pistego
