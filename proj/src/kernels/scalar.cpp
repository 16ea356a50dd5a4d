#include "seminest/kernels.hpp"

namespace seminest::kernels::scalar {

std::size_t count_leq(const double* v, std::size_t n, double y) {
  std::size_t k = 0;
  while (k < n && v[k] <= y) ++k;
  return k;
}

void edge_on_lines(double x0, double y0, double slope, double step, std::int64_t first,
                   std::size_t count, double* out) {
  for (std::size_t k = 0; k < count; ++k) {
    const double x = static_cast<double>(first + static_cast<std::int64_t>(k)) * step;
    out[k] = y0 + (x - x0) * slope;
  }
}

}  // namespace seminest::kernels::scalar
