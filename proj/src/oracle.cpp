#include "seminest/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"

namespace seminest {

namespace {

struct Section {
  std::vector<std::pair<double, double>> spans;
};

// Cross-section of a polygon at x, which must not be a vertex abscissa.
Section cross_section(const Polygon& p, double x) {
  std::vector<double> ys;
  const std::size_t n = p.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Point& a = p[k];
    const Point& b = p[(k + 1) % n];
    const double lo = std::min(a.x, b.x);
    const double hi = std::max(a.x, b.x);
    if (!(lo < x && x < hi)) continue;
    ys.push_back(a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x));
  }
  std::sort(ys.begin(), ys.end());
  Section s;
  for (std::size_t j = 0; j + 1 < ys.size(); j += 2) s.spans.emplace_back(ys[j], ys[j + 1]);
  return s;
}

// Length of the common part of two sorted disjoint span lists.
double common_length(const Section& a, const Section& b, double* witness_y) {
  double total = 0.0;
  std::size_t i = 0, j = 0;
  bool have = false;
  while (i < a.spans.size() && j < b.spans.size()) {
    const double lo = std::max(a.spans[i].first, b.spans[j].first);
    const double hi = std::min(a.spans[i].second, b.spans[j].second);
    if (hi > lo) {
      total += hi - lo;
      if (!have && witness_y) {
        *witness_y = 0.5 * (lo + hi);
        have = true;
      }
    }
    if (a.spans[i].second < b.spans[j].second) ++i; else ++j;
  }
  return total;
}

bool crossing_x(const Point& p1, const Point& p2, const Point& q1, const Point& q2, double* x) {
  const double rx = p2.x - p1.x, ry = p2.y - p1.y;
  const double sx = q2.x - q1.x, sy = q2.y - q1.y;
  const double den = rx * sy - ry * sx;
  if (den == 0.0) return false;
  const double qpx = q1.x - p1.x, qpy = q1.y - p1.y;
  const double t = (qpx * sy - qpy * sx) / den;
  const double u = (qpx * ry - qpy * rx) / den;
  if (t < 0.0 || t > 1.0 || u < 0.0 || u > 1.0) return false;
  *x = p1.x + t * rx;
  return true;
}

double area_tolerance(const Aabb& a, const Aabb& b) {
  const double s = std::max({a.width(), a.height(), b.width(), b.height(), 1e-6});
  return 1e-10 * s * s;
}

}  // namespace

Polygon PlacedPolygon::world() const { return translate(rotate(polygon, rotation), x, y); }

IntersectionResult intersection_area(const Polygon& a, const Polygon& b) {
  IntersectionResult res;
  const Aabb ba = bounds(a);
  const Aabb bb = bounds(b);
  const double x_lo = std::max(ba.min_x, bb.min_x);
  const double x_hi = std::min(ba.max_x, bb.max_x);
  if (!(x_hi > x_lo)) return res;
  if (!(std::min(ba.max_y, bb.max_y) > std::max(ba.min_y, bb.min_y))) return res;

  std::vector<double> xs{x_lo, x_hi};
  for (const auto& v : a.vertices) if (v.x > x_lo && v.x < x_hi) xs.push_back(v.x);
  for (const auto& v : b.vertices) if (v.x > x_lo && v.x < x_hi) xs.push_back(v.x);
  const std::size_t na = a.size(), nb = b.size();
  for (std::size_t i = 0; i < na; ++i) {
    const Point& p1 = a[i];
    const Point& p2 = a[(i + 1) % na];
    for (std::size_t j = 0; j < nb; ++j) {
      double x;
      if (crossing_x(p1, p2, b[j], b[(j + 1) % nb], &x) && x > x_lo && x < x_hi) xs.push_back(x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  double best = 0.0;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const double w = xs[k + 1] - xs[k];
    if (!(w > 0.0)) continue;
    const double xm = 0.5 * (xs[k] + xs[k + 1]);
    double wy = 0.0;
    const double len = common_length(cross_section(a, xm), cross_section(b, xm), &wy);
    const double contrib = len * w;
    res.area += contrib;
    if (contrib > best) {
      best = contrib;
      res.witness = {xm, wy};
    }
  }
  return res;
}

bool interiors_intersect(const Polygon& a, const Polygon& b) {
  const IntersectionResult r = intersection_area(a, b);
  return r.area > area_tolerance(bounds(a), bounds(b));
}

bool interiors_intersect(const PlacedPolygon& a, const PlacedPolygon& b) {
  return interiors_intersect(a.world(), b.world());
}

std::string AuditReport::to_json(const std::vector<PlacementRecord>& placements) const {
  nlohmann::json j;
  j["ok"] = ok();
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : violations) {
    v.push_back({{"first", placements[x.first].piece_id + "#" + std::to_string(placements[x.first].copy)},
                 {"second", placements[x.second].piece_id + "#" + std::to_string(placements[x.second].copy)},
                 {"witness", {x.witness.x, x.witness.y}},
                 {"area", x.area}});
  }
  j["violations"] = v;
  nlohmann::json o = nlohmann::json::array();
  for (auto k : out_of_strip) o.push_back(placements[k].piece_id + "#" + std::to_string(placements[k].copy));
  j["out_of_strip"] = o;
  return j.dump(2);
}

AuditReport verify_layout(const std::vector<PlacementRecord>& placements, const Dataset& d,
                          double resolution, double y_max) {
  AuditReport report;
  const std::size_t n = placements.size();
  std::vector<Polygon> world(n);
  std::vector<Aabb> box(n);
  const double tol_y = 1e-9 * y_max;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& pl = placements[k];
    PlacedPolygon pp{d.pieces.at(pl.piece_index).polygon, static_cast<double>(pl.t.m) * resolution, pl.t.y,
                     pl.rotation};
    world[k] = pp.world();
    box[k] = bounds(world[k]);
    if (box[k].min_y < -tol_y || box[k].max_y > y_max + tol_y || box[k].min_x < -tol_y) {
      report.out_of_strip.push_back(k);
    }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return box[a].min_x < box[b].min_x; });
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = order[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t b = order[j];
      if (box[b].min_x >= box[a].max_x) break;
      if (box[b].min_y >= box[a].max_y || box[a].min_y >= box[b].max_y) continue;
      const IntersectionResult r = intersection_area(world[a], world[b]);
      if (r.area > area_tolerance(box[a], box[b])) {
        report.violations.push_back({std::min(a, b), std::max(a, b), r.witness, r.area});
      }
    }
  }
  return report;
}

namespace {

bool has_side(Label l, int side) { return (static_cast<int>(l) & side) != 0; }

// Closed ranges covered on one side of the line, touching ranges fused.
std::vector<std::pair<double, double>> side_cover(const std::vector<IntervalTuple>& ts, int side, double eps) {
  std::vector<std::pair<double, double>> r;
  for (const auto& t : ts) {
    if (has_side(t.label, side) && t.t > t.b) r.emplace_back(t.b, t.t);
  }
  std::sort(r.begin(), r.end());
  std::vector<std::pair<double, double>> out;
  for (const auto& x : r) {
    if (!out.empty() && x.first <= out.back().second + eps) {
      out.back().second = std::max(out.back().second, x.second);
    } else {
      out.push_back(x);
    }
  }
  return out;
}

bool strictly_covered(const std::vector<std::pair<double, double>>& cover, double y, double eps) {
  for (const auto& c : cover) {
    if (y > c.first + eps && y < c.second - eps) return true;
  }
  return false;
}

// Separate statement of the placement rule on one line. On each side of the
// line (left = 1, right = 2) the material of the two pieces must not share a
// positive-length range, and a zero-length range of one piece must not lie
// strictly inside the covered part of the other.
bool line_blocked(const std::vector<IntervalTuple>& piece, const std::vector<IntervalTuple>& filled, double eps) {
  for (int side : {1, 2}) {
    const auto pc = side_cover(piece, side, eps);
    const auto fc = side_cover(filled, side, eps);
    for (const auto& a : pc) {
      for (const auto& b : fc) {
        if (std::min(a.second, b.second) - std::max(a.first, b.first) > eps) return true;
      }
    }
    for (const auto& t : piece) {
      if (t.b == t.t && has_side(t.label, side) && strictly_covered(fc, t.b, eps)) return true;
    }
    for (const auto& t : filled) {
      if (t.b == t.t && has_side(t.label, side) && strictly_covered(pc, t.b, eps)) return true;
    }
  }
  return false;
}

bool feasible(const StripState& strip, const SemiDiscretePiece& sd, std::int64_t m, double y) {
  for (std::size_t i = 0; i < sd.num_columns(); ++i) {
    const StripColumn& col = strip.column(m + static_cast<std::int64_t>(i));
    std::vector<IntervalTuple> piece;
    for (const auto& p : sd.columns[i].tuples) {
      if (p.t + y > strip.y_max + strip.eps) return false;
      piece.push_back({p.b + y, p.t + y, p.label});
    }
    std::vector<IntervalTuple> filled;
    for (std::size_t j = 0; j < col.size(); ++j) filled.push_back(col.at(j));
    if (line_blocked(piece, filled, strip.eps)) return false;
  }
  return true;
}

}  // namespace

TranslationVector reference_blf(const StripState& strip, const SemiDiscretePiece& sd) {
  for (std::int64_t m = 0;; ++m) {
    std::vector<double> ys{0.0};
    for (std::size_t i = 0; i < sd.num_columns(); ++i) {
      const StripColumn& col = strip.column(m + static_cast<std::int64_t>(i));
      for (const auto& p : sd.columns[i].tuples) {
        for (std::size_t j = 0; j < col.size(); ++j) {
          const double y = col.t[j] - p.b;
          if (y > 0.0) ys.push_back(y);
        }
      }
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    for (double y : ys) {
      if (feasible(strip, sd, m, y)) return {m, y};
    }
    if (static_cast<std::size_t>(m) > strip.columns.size() + sd.num_columns()) {
      return {m, 0.0};  // unreachable when the piece fits the strip width
    }
  }
}

}  // namespace seminest
