#include "seminest/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define SEMINEST_HAVE_X86 1
#endif

namespace seminest::kernels::avx2 {

#if defined(SEMINEST_HAVE_X86)

bool supported() { return __builtin_cpu_supports("avx2"); }

__attribute__((target("avx2"))) std::size_t count_leq(const double* v, std::size_t n, double y) {
  const __m256d yy = _mm256_set1_pd(y);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d x = _mm256_loadu_pd(v + k);
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(x, yy, _CMP_LE_OQ));
    if (mask != 0xF) return k + static_cast<std::size_t>(__builtin_ctz(~mask & 0xF));
  }
  while (k < n && v[k] <= y) ++k;
  return k;
}

__attribute__((target("avx2"))) void edge_on_lines(double x0, double y0, double slope,
                                                   double step, std::int64_t first,
                                                   std::size_t count, double* out) {
  const __m256d vx0 = _mm256_set1_pd(x0);
  const __m256d vy0 = _mm256_set1_pd(y0);
  const __m256d vs = _mm256_set1_pd(slope);
  const __m256d vstep = _mm256_set1_pd(step);
  const __m256d lane = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    // Line indices stay far below 2^53, so the int to double conversion
    // and the lane offset are exact, matching the scalar path.
    const __m256d idx =
        _mm256_add_pd(_mm256_set1_pd(static_cast<double>(first + static_cast<std::int64_t>(k))), lane);
    const __m256d x = _mm256_mul_pd(idx, vstep);
    const __m256d y = _mm256_add_pd(vy0, _mm256_mul_pd(_mm256_sub_pd(x, vx0), vs));
    _mm256_storeu_pd(out + k, y);
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

}  // namespace seminest::kernels::avx2
