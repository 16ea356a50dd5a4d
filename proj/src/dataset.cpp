#include "seminest/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace seminest {

using nlohmann::json;

std::size_t Dataset::total_quantity() const {
  std::size_t n = 0;
  for (const auto& p : pieces) n += static_cast<std::size_t>(p.quantity);
  return n;
}

std::vector<double> rotations_from_step(double step_degrees) {
  if (!(step_degrees > 0.0) || step_degrees > 360.0) {
    throw std::invalid_argument("rotation step must lie in (0, 360]");
  }
  std::vector<double> out;
  for (int k = 0;; ++k) {
    const double a = k * step_degrees;
    if (a >= 360.0 - 1e-9) break;
    out.push_back(a);
  }
  return out;
}

namespace {

double number_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  if (!j.at(key).is_number()) throw ParseError(where + ": field '" + key + "' must be a number");
  return j.at(key).get<double>();
}

}  // namespace

Dataset parse_dataset_text(const std::string& text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!root.is_object()) throw ParseError(origin + ": top level must be an object");

  Dataset d;
  d.name = root.value("name", std::string("unnamed"));
  d.strip_width = number_field(root, "strip_width", origin);
  if (!(d.strip_width > 0.0)) throw ParseError(origin + ": strip_width must be positive");

  if (root.contains("rotations")) {
    const json& r = root.at("rotations");
    if (r.is_string()) {
      if (r.get<std::string>() != "free") throw ParseError(origin + ": rotations must be a list or \"free\"");
      d.free_rotation = true;
      d.rotations = {0.0};
    } else if (r.is_array()) {
      d.rotations.clear();
      for (const auto& a : r) {
        if (!a.is_number()) throw ParseError(origin + ": rotation angles must be numbers");
        d.rotations.push_back(a.get<double>());
      }
      if (d.rotations.empty()) throw ParseError(origin + ": rotation list is empty");
    } else {
      throw ParseError(origin + ": rotations must be a list or \"free\"");
    }
  }

  if (!root.contains("pieces") || !root.at("pieces").is_array()) {
    throw ParseError(origin + ": missing array field 'pieces'");
  }
  std::size_t idx = 0;
  for (const auto& pj : root.at("pieces")) {
    const std::string where = origin + ": pieces[" + std::to_string(idx) + "]";
    Piece piece;
    if (pj.contains("id")) {
      piece.id = pj.at("id").is_string() ? pj.at("id").get<std::string>() : pj.at("id").dump();
    } else {
      piece.id = std::to_string(idx);
    }
    piece.quantity = pj.contains("quantity") ? pj.at("quantity").get<int>() : 1;
    if (piece.quantity < 1) throw ParseError(where + ": quantity must be positive");
    if (!pj.contains("vertices") || !pj.at("vertices").is_array()) {
      throw ParseError(where + ": missing array field 'vertices'");
    }
    Polygon raw;
    for (const auto& v : pj.at("vertices")) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ParseError(where + ": each vertex must be [x, y]");
      }
      raw.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    try {
      piece.polygon = validate_and_normalize(raw);
    } catch (const GeometryError& e) {
      throw ValidationError(piece.id, e.what());
    }
    piece.allowed_rotations = d.rotations;
    d.pieces.push_back(std::move(piece));
    ++idx;
  }
  if (d.pieces.empty()) throw ParseError(origin + ": no pieces");
  return d;
}

Dataset parse_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_dataset_text(ss.str(), path);
}

std::string dataset_to_json(const Dataset& d) {
  json root;
  root["name"] = d.name;
  root["strip_width"] = d.strip_width;
  if (d.free_rotation) {
    root["rotations"] = "free";
  } else {
    root["rotations"] = d.rotations;
  }
  json pieces = json::array();
  for (const auto& p : d.pieces) {
    json pj;
    pj["id"] = p.id;
    pj["quantity"] = p.quantity;
    json verts = json::array();
    for (const auto& v : p.polygon.vertices) verts.push_back({v.x, v.y});
    pj["vertices"] = verts;
    pieces.push_back(pj);
  }
  root["pieces"] = pieces;
  return root.dump(1);
}

}  // namespace seminest
