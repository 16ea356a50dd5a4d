#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

// Hot inner loops with a scalar reference and SIMD variants chosen at
// runtime. All variants produce bit-identical results: the arithmetic is
// the same sequence of IEEE operations and contraction is disabled.
namespace seminest::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

// Number of leading entries of the ascending array v[0..n) that are <= y.
using CountLeqFn = std::size_t (*)(const double* v, std::size_t n, double y);

// out[k] = y0 + ((first + k) * step - x0) * slope for k in [0, count).
// Evaluates one straight edge on a run of equally spaced vertical lines.
using EdgeOnLinesFn = void (*)(double x0, double y0, double slope, double step, std::int64_t first,
                               std::size_t count, double* out);

namespace scalar {
std::size_t count_leq(const double* v, std::size_t n, double y);
void edge_on_lines(double x0, double y0, double slope, double step, std::int64_t first,
                   std::size_t count, double* out);
}  // namespace scalar

namespace avx2 {
bool supported();
std::size_t count_leq(const double* v, std::size_t n, double y);
void edge_on_lines(double x0, double y0, double slope, double step, std::int64_t first,
                   std::size_t count, double* out);
}  // namespace avx2

namespace neon {
bool supported();
std::size_t count_leq(const double* v, std::size_t n, double y);
void edge_on_lines(double x0, double y0, double slope, double step, std::int64_t first,
                   std::size_t count, double* out);
}  // namespace neon

// Variants usable on this machine, scalar first.
std::vector<Isa> available();

// Active variant. Initialised from the CPU, overridable with the
// SEMINEST_KERNELS environment variable (scalar, avx2, neon).
Isa active();

// Returns false and leaves the selection unchanged if isa is unavailable.
bool select(Isa isa);

std::size_t count_leq(const double* v, std::size_t n, double y);
void edge_on_lines(double x0, double y0, double slope, double step, std::int64_t first,
                   std::size_t count, double* out);

}  // namespace seminest::kernels
