#include "pistego/error.hpp"
#include "pistego/metrics.hpp"

namespace pistego::reference {

std::uint64_t squared_error(const Plane& a, const Plane& b) {
  if (!a.same_shape(b)) throw StegoError(ErrorKind::DimensionMismatch, "mse: planes differ in size");
  std::uint64_t sum = 0;
  for (std::size_t y = 0; y < a.height(); ++y) {
    for (std::size_t x = 0; x < a.width(); ++x) {
      const int d = int(a.at(x, y)) - int(b.at(x, y));
      sum += std::uint64_t(d * d);
    }
  }
  return sum;
}

Histogram histogram(const Plane& p) {
  Histogram h{};
  for (std::uint8_t v : p.pixels()) ++h[v];
  return h;
}

}  // namespace pistego::reference
