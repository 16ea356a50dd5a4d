#pragma once

#include <stdexcept>
#include <string>

#include "seminest/dataset.hpp"
#include "seminest/placement.hpp"

namespace seminest {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Strip outline, filled pieces and a length label. y grows upwards in the
// drawing, so the strip bottom is the bottom edge of the image.
std::string render_svg(const Layout& layout, const Dataset& d, double resolution);
void render_svg(const Layout& layout, const Dataset& d, double resolution, const std::string& path);

}  // namespace seminest
