#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seminest/dataset.hpp"
#include "seminest/geometry.hpp"
#include "seminest/placement.hpp"
#include "seminest/semidiscrete.hpp"
#include "seminest/strip.hpp"

namespace seminest {

struct PlacedPolygon {
  Polygon polygon;  // normalized, unrotated
  double x = 0.0;
  double y = 0.0;
  double rotation = 0.0;

  Polygon world() const;
};

// Area of the intersection of two simple polygons, computed exactly up to
// rounding by integrating cross-section overlap over x-slabs whose borders
// include every vertex and every edge-edge crossing. Inside each slab the
// overlap length is linear in x, so the midpoint rule is exact.
struct IntersectionResult {
  double area = 0.0;
  Point witness;  // a point of the common interior when area > 0
};
IntersectionResult intersection_area(const Polygon& a, const Polygon& b);

// Open interiors share a point. Touching edges or vertices do not count.
bool interiors_intersect(const PlacedPolygon& a, const PlacedPolygon& b);
bool interiors_intersect(const Polygon& a, const Polygon& b);

struct Violation {
  std::size_t first = 0;   // placement indices
  std::size_t second = 0;
  Point witness;
  double area = 0.0;
};

struct AuditReport {
  std::vector<Violation> violations;
  std::vector<std::size_t> out_of_strip;

  bool ok() const { return violations.empty() && out_of_strip.empty(); }
  std::string to_json(const std::vector<PlacementRecord>& placements) const;
};

AuditReport verify_layout(const std::vector<PlacementRecord>& placements, const Dataset& d,
                          double resolution, double y_max);

// Brute force bottom-left position: for m = 0, 1, ... test every candidate
// y (0 and each filled top minus piece bottom) in ascending order against
// every tuple pair. Independent of try_fit and place_piece.
TranslationVector reference_blf(const StripState& strip, const SemiDiscretePiece& sd);

}  // namespace seminest
