#include "seminest/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace seminest {

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double dot(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

int orientation(const Point& a, const Point& b, const Point& c, double tol) {
  const double v = cross(a, b, c);
  if (v > tol) return 1;
  if (v < -tol) return -1;
  return 0;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

double raw_scale(const std::vector<Point>& v) {
  double s = 0.0;
  for (const auto& q : v) s = std::max({s, std::abs(q.x), std::abs(q.y)});
  return std::max(s, 1.0);
}

// Drops consecutive duplicates and straight vertices until none remain.
// A vertex that doubles back on its predecessor makes the ring non-simple.
std::vector<Point> merge_collinear(std::vector<Point> v, double tol) {
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
      const std::size_t n = v.size();
      const Point& prev = v[(i + n - 1) % n];
      const Point& cur = v[i];
      const Point& next = v[(i + 1) % n];
      if (cur == next) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      if (std::abs(cross(prev, cur, next)) <= tol) {
        if (dot(cur, prev, next) > 0.0) {
          throw GeometryError(GeometryErrorKind::SelfIntersecting,
                              "polygon boundary folds back on itself");
        }
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return v;
}

// Every vertex on one line through the vertex farthest from the first.
bool all_collinear(const std::vector<Point>& v, double tol) {
  std::size_t far = 0;
  double best = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double d = std::hypot(v[i].x - v[0].x, v[i].y - v[0].y);
    if (d > best) {
      best = d;
      far = i;
    }
  }
  for (const auto& q : v) {
    if (std::abs(cross(v[0], v[far], q)) > tol) return false;
  }
  return true;
}

}  // namespace

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orientation(a, b, c, 0.0);
  const int o2 = orientation(a, b, d, 0.0);
  const int o3 = orientation(c, d, a, 0.0);
  const int o4 = orientation(c, d, b, 0.0);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

bool is_simple(const Polygon& p) {
  const std::size_t n = p.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = p[i];
    const Point& b = p[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      const Point& c = p[j];
      const Point& d = p[(j + 1) % n];
      if (adjacent) {
        // Adjacent edges share one vertex; any further contact is a fold.
        const Point& shared = (j == i + 1) ? b : a;
        const Point& other_i = (j == i + 1) ? a : b;
        const Point& other_j = (j == i + 1) ? d : c;
        if (orientation(other_i, shared, other_j, 0.0) == 0 &&
            dot(shared, other_i, other_j) > 0.0) {
          return false;
        }
        continue;
      }
      if (segments_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

double signed_area(const Polygon& p) {
  const std::size_t n = p.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = p[i];
    const Point& b = p[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return 0.5 * s;
}

double area(const Polygon& p) { return std::abs(signed_area(p)); }

Aabb bounds(const Polygon& p) {
  Aabb box;
  if (p.vertices.empty()) return box;
  box.min_x = box.max_x = p[0].x;
  box.min_y = box.max_y = p[0].y;
  for (const auto& q : p.vertices) {
    box.min_x = std::min(box.min_x, q.x);
    box.max_x = std::max(box.max_x, q.x);
    box.min_y = std::min(box.min_y, q.y);
    box.max_y = std::max(box.max_y, q.y);
  }
  return box;
}

Aabb aabb(const Polygon& p) {
  const Aabb b = bounds(p);
  return Aabb{0.0, 0.0, b.width(), b.height()};
}

double coordinate_scale(const Polygon& p) { return raw_scale(p.vertices); }

Polygon translate(const Polygon& p, double dx, double dy) {
  Polygon out = p;
  for (auto& q : out.vertices) {
    q.x += dx;
    q.y += dy;
  }
  return out;
}

Polygon translate_to_origin(const Polygon& p) {
  const Aabb b = bounds(p);
  Polygon out = p;
  for (auto& q : out.vertices) {
    q.x -= b.min_x;
    q.y -= b.min_y;
  }
  return out;
}

Polygon validate_and_normalize(const Polygon& raw) {
  if (raw.size() < 3) {
    throw GeometryError(GeometryErrorKind::TooFewVertices, "polygon needs at least 3 vertices");
  }
  for (const auto& q : raw.vertices) {
    if (!std::isfinite(q.x) || !std::isfinite(q.y)) {
      throw GeometryError(GeometryErrorKind::NonFinite, "non-finite vertex coordinate");
    }
  }
  const double scale = raw_scale(raw.vertices);
  if (all_collinear(raw.vertices, kStraightTolerance * scale * scale)) {
    throw GeometryError(GeometryErrorKind::DegenerateArea, "all vertices are collinear");
  }
  std::vector<Point> v = merge_collinear(raw.vertices, kStraightTolerance * scale * scale);
  if (v.size() < 3) {
    throw GeometryError(GeometryErrorKind::DegenerateArea, "polygon collapses to a line");
  }
  Polygon p{std::move(v)};
  if (!is_simple(p)) {
    throw GeometryError(GeometryErrorKind::SelfIntersecting, "polygon is self-intersecting");
  }
  const double a = signed_area(p);
  if (std::abs(a) < kAreaTolerance) {
    throw GeometryError(GeometryErrorKind::DegenerateArea, "polygon area below tolerance");
  }
  if (a < 0.0) std::reverse(p.vertices.begin(), p.vertices.end());
  return translate_to_origin(p);
}

Polygon rotate(const Polygon& p, double theta_degrees) {
  double turns = std::fmod(theta_degrees, 360.0);
  if (turns < 0.0) turns += 360.0;
  Polygon out = p;
  if (std::fmod(turns, 90.0) == 0.0) {
    const int quarter = static_cast<int>(turns / 90.0);
    for (auto& q : out.vertices) {
      const double x = q.x;
      const double y = q.y;
      switch (quarter) {
        case 1: q = {-y, x}; break;
        case 2: q = {-x, -y}; break;
        case 3: q = {y, -x}; break;
        default: break;
      }
    }
  } else {
    const double rad = turns * std::acos(-1.0) / 180.0;
    const double c = std::cos(rad);
    const double s = std::sin(rad);
    for (auto& q : out.vertices) {
      const double x = q.x;
      const double y = q.y;
      q = {c * x - s * y, s * x + c * y};
    }
  }
  return translate_to_origin(out);
}

VertexKind vertex_kind(const Polygon& p, std::size_t i) {
  const std::size_t n = p.size();
  const Point& prev = p[(i + n - 1) % n];
  const Point& cur = p[i];
  const Point& next = p[(i + 1) % n];
  const double scale = coordinate_scale(p);
  const double c = cross(prev, cur, next);
  if (std::abs(c) < kStraightTolerance * scale * scale) return VertexKind::Straight;
  return c > 0.0 ? VertexKind::Convex : VertexKind::Reflex;
}

}  // namespace seminest
