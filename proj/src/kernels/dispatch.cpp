#include <atomic>
#include <cstdlib>
#include <string>

#include "seminest/kernels.hpp"

namespace seminest::kernels {

namespace {

struct Table {
  Isa isa;
  CountLeqFn count_leq;
  EdgeOnLinesFn edge_on_lines;
};

constexpr Table kScalar{Isa::Scalar, scalar::count_leq, scalar::edge_on_lines};
constexpr Table kAvx2{Isa::Avx2, avx2::count_leq, avx2::edge_on_lines};
constexpr Table kNeon{Isa::Neon, neon::count_leq, neon::edge_on_lines};

bool usable(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: return avx2::supported();
    case Isa::Neon: return neon::supported();
  }
  return false;
}

const Table* table_for(Isa isa) {
  switch (isa) {
    case Isa::Avx2: return &kAvx2;
    case Isa::Neon: return &kNeon;
    default: return &kScalar;
  }
}

const Table* initial_table() {
  if (const char* env = std::getenv("SEMINEST_KERNELS")) {
    const std::string want(env);
    if (want == "scalar") return &kScalar;
    if (want == "avx2" && usable(Isa::Avx2)) return &kAvx2;
    if (want == "neon" && usable(Isa::Neon)) return &kNeon;
  }
  if (usable(Isa::Avx2)) return &kAvx2;
  if (usable(Isa::Neon)) return &kNeon;
  return &kScalar;
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> t{initial_table()};
  return t;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

std::vector<Isa> available() {
  std::vector<Isa> out{Isa::Scalar};
  if (usable(Isa::Avx2)) out.push_back(Isa::Avx2);
  if (usable(Isa::Neon)) out.push_back(Isa::Neon);
  return out;
}

Isa active() { return current().load(std::memory_order_relaxed)->isa; }

bool select(Isa isa) {
  if (!usable(isa)) return false;
  current().store(table_for(isa), std::memory_order_relaxed);
  return true;
}

std::size_t count_leq(const double* v, std::size_t n, double y) {
  return current().load(std::memory_order_relaxed)->count_leq(v, n, y);
}

void edge_on_lines(double x0, double y0, double slope, double step, std::int64_t first,
                   std::size_t count, double* out) {
  current().load(std::memory_order_relaxed)->edge_on_lines(x0, y0, slope, step, first, count, out);
}

}  // namespace seminest::kernels
