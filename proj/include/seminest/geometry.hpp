#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace seminest {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Implicitly closed ring. After validate_and_normalize it is simple,
// counter-clockwise and its bounding box starts at the origin.
struct Polygon {
  std::vector<Point> vertices;

  std::size_t size() const { return vertices.size(); }
  const Point& operator[](std::size_t i) const { return vertices[i]; }
  friend bool operator==(const Polygon&, const Polygon&) = default;
};

struct Piece {
  std::string id;
  Polygon polygon;
  int quantity = 1;
  std::vector<double> allowed_rotations{0.0};
};

struct Aabb {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
};

enum class GeometryErrorKind { SelfIntersecting, DegenerateArea, TooFewVertices, NonFinite };

class GeometryError : public std::runtime_error {
 public:
  GeometryError(GeometryErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  GeometryErrorKind kind() const { return kind_; }

 private:
  GeometryErrorKind kind_;
};

enum class VertexKind { Convex, Reflex, Straight };

inline constexpr double kAreaTolerance = 1e-12;
inline constexpr double kStraightTolerance = 1e-12;

// Simple, CCW, collinear runs merged, AABB lower-left moved to (0,0).
Polygon validate_and_normalize(const Polygon& raw);

double signed_area(const Polygon& p);
double area(const Polygon& p);

Aabb bounds(const Polygon& p);
// Width and height of the bounding box.
Aabb aabb(const Polygon& p);

// Rotation about the origin followed by translation of the bounding box to
// the origin. Multiples of 90 degrees are applied exactly.
Polygon rotate(const Polygon& p, double theta_degrees);

Polygon translate(const Polygon& p, double dx, double dy);
Polygon translate_to_origin(const Polygon& p);

VertexKind vertex_kind(const Polygon& p, std::size_t i);

// Largest absolute extent, used to scale tolerances.
double coordinate_scale(const Polygon& p);

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);
bool is_simple(const Polygon& p);

}  // namespace seminest
