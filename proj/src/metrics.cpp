#include "pistego/metrics.hpp"

#include <cmath>
#include <limits>

#include "pistego/error.hpp"

namespace pistego {

std::uint64_t squared_error(const Plane& a, const Plane& b) {
  if (!a.same_shape(b)) throw StegoError(ErrorKind::DimensionMismatch, "mse: planes differ in size");
  const auto x = a.pixels();
  const auto y = b.pixels();
  const std::int64_t n = std::int64_t(x.size());
  std::uint64_t sum = 0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const int d = int(x[std::size_t(i)]) - int(y[std::size_t(i)]);
    sum += std::uint64_t(d * d);
  }
  return sum;
}

double mse(const Plane& a, const Plane& b) {
  const std::uint64_t sum = squared_error(a, b);
  if (a.empty()) throw StegoError(ErrorKind::EmptyImage, "mse of empty planes");
  return double(sum) / double(a.size());
}

double psnr(double mse_value) {
  if (mse_value == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse_value);
}

double bpp(std::uint64_t bits_embedded, std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) throw StegoError(ErrorKind::EmptyImage, "bpp of an empty image");
  return double(bits_embedded) / (double(width) * double(height));
}

Histogram histogram(const Plane& p) {
  Histogram total{};
  const auto px = p.pixels();
  const std::int64_t n = std::int64_t(px.size());
#pragma omp parallel
  {
    Histogram local{};
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) ++local[px[std::size_t(i)]];
#pragma omp critical
    for (std::size_t v = 0; v < local.size(); ++v) total[v] += local[v];
  }
  return total;
}

StegoReport full_report(const RgbImage& cover, const RgbImage& stego, std::uint64_t bits_embedded) {
  if (cover.width() != stego.width() || cover.height() != stego.height()) {
    throw StegoError(ErrorKind::DimensionMismatch, "cover and stego differ in size");
  }
  StegoReport r{};
  for (Channel c : {Channel::Red, Channel::Green, Channel::Blue}) {
    const double m = mse(cover.plane(c), stego.plane(c));
    r.per_channel[std::size_t(c)] = ChannelReport{c, m, psnr(m)};
  }
  r.bits_embedded = bits_embedded;
  r.width = cover.width();
  r.height = cover.height();
  r.bpp = bpp(bits_embedded, r.width, r.height);
  return r;
}

StegoReport full_report(const RgbImage& cover, const EmbedResult& result) {
  return full_report(cover, result.stego, result.bits_embedded);
}

}  // namespace pistego
