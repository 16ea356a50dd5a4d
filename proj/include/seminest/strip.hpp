#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "seminest/semidiscrete.hpp"

namespace seminest {

// Candidate offset of a piece: x = m * R, continuous y.
struct TranslationVector {
  std::int64_t m = 0;
  double y = 0.0;

  friend bool operator==(const TranslationVector&, const TranslationVector&) = default;
};

// Filled tuples of one strip line, stored as parallel arrays so the bottom
// coordinates can be scanned with the SIMD kernels.
struct StripColumn {
  std::vector<double> b;
  std::vector<double> t;
  std::vector<Label> label;
  // Sides shared with the positive-length tuple ending where this one starts.
  std::vector<std::uint8_t> seam_below;

  std::size_t size() const { return b.size(); }
  bool empty() const { return b.empty(); }
  IntervalTuple at(std::size_t j) const { return {b[j], t[j], label[j]}; }
};

struct StripState {
  double y_max = 0.0;
  double resolution = 1.0;
  double eps = 0.0;  // y tolerance, values closer than this touch
  double length = 0.0;
  std::vector<StripColumn> columns;

  StripState() = default;
  StripState(double width, double r);

  const StripColumn& column(std::int64_t k) const;
  std::size_t num_filled_tuples() const;
};

enum class FitKind { Fits, ShiftTo, Impossible };

struct FitResult {
  FitKind kind = FitKind::Fits;
  double y = 0.0;  // final y for ShiftTo
};

struct FitCounters {
  std::uint64_t checks = 0;
  std::uint64_t index_search_checks = 0;
};

class InfeasibleCommit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Overlap of two closed ranges counts only with positive length, or when a
// zero-length range lies strictly inside the other one.
bool ranges_overlap(double b1, double t1, double b2, double t2, double eps);

// A piece tuple may share range with a filled tuple only when their side
// sets are disjoint, that is an R tuple over an L tuple or the reverse.
bool tuples_conflict(const IntervalTuple& piece, const IntervalTuple& filled, double eps);

// Two positive-length tuples of one column that touch form a seam; the sides
// they share are covered across the seam point. A zero-length tuple of the
// other piece on that point lies inside the covered range, so it conflicts
// like a point strictly inside one tuple.
// below[j]: sides tuple j shares with the tuple ending at its bottom.
// above[j]: sides tuple j shares with the tuple starting at its top.
std::vector<std::uint8_t> seams_below(const std::vector<IntervalTuple>& column, double eps);
std::vector<std::uint8_t> seams_above(const std::vector<IntervalTuple>& column, double eps);

// Lowest y >= y_t at which the tuple fits on this column, found by shifting
// above each blocking filled tuple in turn. seam_above is the tuple's entry
// from seams_above over its own piece column.
FitResult try_fit(const StripColumn& col, const IntervalTuple& tuple, std::uint8_t seam_above, double y_t,
                  double y_max, double eps, FitCounters* counters = nullptr);

void commit(StripState& strip, const SemiDiscretePiece& sd, const TranslationVector& t);

double used_length(const StripState& strip);

}  // namespace seminest
