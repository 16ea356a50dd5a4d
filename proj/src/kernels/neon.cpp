#include "seminest/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#define SEMINEST_HAVE_NEON 1
#endif

namespace seminest::kernels::neon {

#if defined(SEMINEST_HAVE_NEON)

bool supported() { return true; }

std::size_t count_leq(const double* v, std::size_t n, double y) {
  const float64x2_t yy = vdupq_n_f64(y);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const uint64x2_t le = vcleq_f64(vld1q_f64(v + k), yy);
    if (vgetq_lane_u64(le, 0) == 0) return k;
    if (vgetq_lane_u64(le, 1) == 0) return k + 1;
  }
  while (k < n && v[k] <= y) ++k;
  return k;
}

void edge_on_lines(double x0, double y0, double slope, double step, std::int64_t first,
                   std::size_t count, double* out) {
  const float64x2_t vx0 = vdupq_n_f64(x0);
  const float64x2_t vy0 = vdupq_n_f64(y0);
  const float64x2_t vs = vdupq_n_f64(slope);
  const float64x2_t vstep = vdupq_n_f64(step);
  const double lanes[2] = {0.0, 1.0};
  const float64x2_t lane = vld1q_f64(lanes);
  std::size_t k = 0;
  for (; k + 2 <= count; k += 2) {
    const float64x2_t idx =
        vaddq_f64(vdupq_n_f64(static_cast<double>(first + static_cast<std::int64_t>(k))), lane);
    const float64x2_t x = vmulq_f64(idx, vstep);
    // Separate multiply and add: a fused vfmaq would round differently.
    const float64x2_t y = vaddq_f64(vy0, vmulq_f64(vsubq_f64(x, vx0), vs));
    vst1q_f64(out + k, y);
  }
  for (; k < count; ++k) {
    const double x = static_cast<double>(first + static_cast<std::int64_t>(k)) * step;
    out[k] = y0 + (x - x0) * slope;
  }
}

#else

bool supported() { return false; }

std::size_t count_leq(const double* v, std::size_t n, double y) {
  return scalar::count_leq(v, n, y);
}

void edge_on_lines(double x0, double y0, double slope, double step, std::int64_t first,
                   std::size_t count, double* out) {
  scalar::edge_on_lines(x0, y0, slope, step, first, count, out);
}

#endif

}  // namespace seminest::kernels::neon
