#include "seminest/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "seminest/oracle.hpp"

namespace seminest {

double wasted_fraction(double strip_length, double y_max, double piece_area) {
  if (!(strip_length > 0.0)) throw std::invalid_argument("strip length must be positive");
  const double strip = strip_length * y_max;
  return 100.0 * (strip - piece_area) / strip;
}

double wasted_fraction(const Layout& layout, const Dataset& d) {
  double a = 0.0;
  for (const auto& p : layout.placements) a += area(d.pieces.at(p.piece_index).polygon);
  return wasted_fraction(layout.length, d.strip_width, a);
}

namespace {

double outside_area(const Polygon& region, const Polygon& piece) {
  const double a = area(region);
  if (a <= 0.0) return 0.0;
  return std::max(0.0, a - intersection_area(region, piece).area);
}

Polygon ccw(std::vector<Point> pts) {
  Polygon p{std::move(pts)};
  if (signed_area(p) < 0.0) std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

}  // namespace

double extension_area(const Polygon& p, double resolution) {
  const std::size_t n = p.size();
  const double eps = 1e-9 * std::max(1.0, bounds(p).width());
  double total = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    const Point& pv = p[v];
    const double k = std::round(pv.x / resolution);
    if (std::abs(pv.x - k * resolution) <= eps) continue;
    if (vertex_kind(p, v) != VertexKind::Convex) continue;
    const double s = std::floor(pv.x / resolution);
    const double xl = s * resolution;
    const double xr = (s + 1.0) * resolution;
    for (const Point& w : {p[(v + n - 1) % n], p[(v + 1) % n]}) {
      auto y_at = [&](double x) { return pv.y + (x - pv.x) * (w.y - pv.y) / (w.x - pv.x); };
      if (w.x <= xl + eps) {
        total += outside_area(ccw({pv, {xl, y_at(xl)}, {xl, pv.y}}), p);
      } else if (w.x >= xr - eps) {
        total += outside_area(ccw({pv, {xr, y_at(xr)}, {xr, pv.y}}), p);
      } else {
        total += outside_area(ccw({{xl, pv.y}, pv, w, {xl, w.y}}), p);
        total += outside_area(ccw({pv, {xr, pv.y}, {xr, w.y}, w}), p);
      }
    }
  }
  return total;
}

double layout_extension_area(const Layout& layout, const Dataset& d, double resolution) {
  std::map<std::pair<std::size_t, double>, double> memo;
  double total = 0.0;
  for (const auto& pl : layout.placements) {
    const auto key = std::make_pair(pl.piece_index, pl.rotation);
    auto it = memo.find(key);
    if (it == memo.end()) {
      const Polygon r = rotate(d.pieces.at(pl.piece_index).polygon, pl.rotation);
      it = memo.emplace(key, extension_area(r, resolution)).first;
    }
    total += it->second;
  }
  return total;
}

}  // namespace seminest
