#pragma once

#include <vector>

#include "seminest/dataset.hpp"
#include "seminest/geometry.hpp"
#include "seminest/placement.hpp"

namespace seminest {

// Percentage of the used strip area not covered by pieces.
double wasted_fraction(double strip_length, double y_max, double piece_area);
double wasted_fraction(const Layout& layout, const Dataset& d);

// Area the convex-vertex extensions add outside the piece. For every convex
// vertex strictly between two lines, each adjacent edge bounds a triangle
// (edge leaves the slab) or two trapezoids (edge ends inside the slab)
// against the resolution lines; the part of each region outside the piece is
// summed. Regions of different vertices are not deduplicated.
double extension_area(const Polygon& placed_frame_piece, double resolution);

// Sum of extension_area over every placement of a layout.
double layout_extension_area(const Layout& layout, const Dataset& d, double resolution);

}  // namespace seminest
