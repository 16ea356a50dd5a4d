#include "seminest/strip.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seminest/kernels.hpp"

namespace seminest {

StripState::StripState(double width, double r) : y_max(width), resolution(r), eps(1e-9 * width) {}

const StripColumn& StripState::column(std::int64_t k) const {
  static const StripColumn empty;
  if (k < 0 || static_cast<std::size_t>(k) >= columns.size()) return empty;
  return columns[static_cast<std::size_t>(k)];
}

std::size_t StripState::num_filled_tuples() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

bool ranges_overlap(double b1, double t1, double b2, double t2, double eps) {
  if (std::min(t1, t2) - std::max(b1, b2) > eps) return true;
  if (b1 == t1 && b2 + eps < b1 && b1 < t2 - eps) return true;
  if (b2 == t2 && b1 + eps < b2 && b2 < t1 - eps) return true;
  return false;
}

bool tuples_conflict(const IntervalTuple& piece, const IntervalTuple& filled, double eps) {
  if (complementary(piece.label, filled.label)) return false;
  return ranges_overlap(piece.b, piece.t, filled.b, filled.t, eps);
}

namespace {

// Index of the next positive-length tuple after j, or n.
std::size_t next_solid(const std::vector<IntervalTuple>& c, std::size_t j) {
  for (++j; j < c.size(); ++j) {
    if (!c[j].degenerate()) return j;
  }
  return c.size();
}

}  // namespace

std::vector<std::uint8_t> seams_below(const std::vector<IntervalTuple>& c, double eps) {
  std::vector<std::uint8_t> out(c.size(), 0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].degenerate()) continue;
    const std::size_t k = next_solid(c, j);
    if (k < c.size() && std::abs(c[k].b - c[j].t) <= eps) out[k] = sides(c[j].label) & sides(c[k].label);
  }
  return out;
}

std::vector<std::uint8_t> seams_above(const std::vector<IntervalTuple>& c, double eps) {
  std::vector<std::uint8_t> out(c.size(), 0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].degenerate()) continue;
    const std::size_t k = next_solid(c, j);
    if (k < c.size() && std::abs(c[k].b - c[j].t) <= eps) out[j] = sides(c[j].label) & sides(c[k].label);
  }
  return out;
}

FitResult try_fit(const StripColumn& col, const IntervalTuple& tuple, std::uint8_t seam_above, double y_t,
                  double y_max, double eps, FitCounters* counters) {
  double y = y_t;
  if (tuple.t + y > y_max + eps) return {FitKind::Impossible, y};
  const std::size_t n = col.size();
  if (n == 0) return {FitKind::Fits, y};

  // The first candidate is the last filled tuple starting at or below the
  // piece tuple; everything before it ends below the piece tuple.
  const std::size_t k = kernels::count_leq(col.b.data(), n, tuple.b + y);
  std::size_t j = k > 0 ? k - 1 : 0;
  if (counters) counters->index_search_checks += j;

  const std::uint8_t ps = sides(tuple.label);
  const bool point = tuple.degenerate();
  for (; j < n; ++j) {
    if (counters) ++counters->checks;
    const double pb = tuple.b + y;
    const double pt = tuple.t + y;
    const double sb = col.b[j];
    if (sb > pt + eps) break;
    const std::uint8_t ss = sides(col.label[j]);
    if ((ps & ss) == 0) continue;
    const double st = col.t[j];
    bool hit = ranges_overlap(pb, pt, sb, st, eps);
    // Seams: the piece point on a filled seam, or a filled point on a piece seam.
    if (!hit && point && std::abs(pb - sb) <= eps && (col.seam_below[j] & ps) != 0) hit = true;
    if (!hit && sb == st && std::abs(sb - pt) <= eps && (seam_above & ss) != 0) hit = true;
    if (!hit) continue;
    y = st - tuple.b;
    if (tuple.t + y > y_max + eps) return {FitKind::Impossible, y};
  }
  return y == y_t ? FitResult{FitKind::Fits, y} : FitResult{FitKind::ShiftTo, y};
}

void commit(StripState& strip, const SemiDiscretePiece& sd, const TranslationVector& t) {
  if (t.m < 0) throw InfeasibleCommit("negative column offset");
  const std::size_t need = static_cast<std::size_t>(t.m) + sd.num_columns();
  if (strip.columns.size() < need) strip.columns.resize(need);
  for (std::size_t i = 0; i < sd.num_columns(); ++i) {
    const auto& tuples = sd.columns[i].tuples;
    if (tuples.empty()) continue;
    const std::size_t at = static_cast<std::size_t>(t.m) + i;
    StripColumn& col = strip.columns[at];
    const auto above = seams_above(tuples, strip.eps);
    std::vector<SidedInterval> merged;
    merged.reserve(col.size() + tuples.size());
    for (std::size_t j = 0; j < col.size(); ++j) {
      merged.push_back({col.b[j], col.t[j], sides(col.label[j]), {}});
    }
    for (std::size_t q = 0; q < tuples.size(); ++q) {
      const IntervalTuple& pt = tuples[q];
      if (pt.b + t.y < -strip.eps || pt.t + t.y > strip.y_max + strip.eps) {
        throw InfeasibleCommit("tuple outside the strip on column " + std::to_string(at));
      }
      if (try_fit(col, pt, above[q], t.y, strip.y_max, strip.eps).kind != FitKind::Fits) {
        throw InfeasibleCommit("overlap on column " + std::to_string(at));
      }
      merged.push_back({pt.b + t.y, pt.t + t.y, sides(pt.label), {}});
    }
    const Column norm = normalize_column(merged, strip.eps, false);
    col.b.clear();
    col.t.clear();
    col.label.clear();
    for (const auto& q : norm.tuples) {
      col.b.push_back(q.b);
      col.t.push_back(q.t);
      col.label.push_back(q.label);
    }
    col.seam_below = seams_below(norm.tuples, strip.eps);
  }
  strip.length = std::max(strip.length, static_cast<double>(t.m) * strip.resolution + sd.width);
}

double used_length(const StripState& strip) { return strip.length; }

}  // namespace seminest
