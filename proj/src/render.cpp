#include "seminest/render.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace seminest {

namespace {

const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                          "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string render_svg(const Layout& layout, const Dataset& d, double resolution) {
  const double y_max = d.strip_width;
  const double length = std::max(layout.length, 1e-9);
  const double margin = 0.05 * std::max(length, y_max);
  const double label_h = 0.08 * y_max;
  const double vw = length + 2 * margin;
  const double vh = y_max + 2 * margin + label_h;
  const double stroke = 0.002 * std::max(length, y_max);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(vw) << ' ' << num(vh)
     << "\" width=\"" << num(std::min(1600.0, 20.0 * vw)) << "\">\n";
  // Flip so that strip y = 0 is at the bottom.
  os << "<g transform=\"translate(" << num(margin) << ',' << num(margin + y_max) << ") scale(1,-1)\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << num(layout.length) << "\" height=\"" << num(y_max)
     << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"" << num(stroke) << "\"/>\n";
  for (const auto& pl : layout.placements) {
    const Polygon world =
        translate(rotate(d.pieces.at(pl.piece_index).polygon, pl.rotation),
                  static_cast<double>(pl.t.m) * resolution, pl.t.y);
    os << "<polygon fill=\"" << kPalette[pl.piece_index % std::size(kPalette)] << "\" stroke=\"#333\" stroke-width=\""
       << num(stroke) << "\" points=\"";
    for (std::size_t k = 0; k < world.size(); ++k) {
      if (k) os << ' ';
      os << num(world[k].x) << ',' << num(world[k].y);
    }
    os << "\"/>\n";
  }
  os << "</g>\n";
  os << "<text x=\"" << num(margin) << "\" y=\"" << num(vh - margin * 0.5) << "\" font-size=\"" << num(label_h * 0.8)
     << "\" font-family=\"sans-serif\">length = " << num(layout.length) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

void render_svg(const Layout& layout, const Dataset& d, double resolution, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << render_svg(layout, d, resolution);
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace seminest
