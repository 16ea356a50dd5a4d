#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "seminest/geometry.hpp"

namespace seminest {

struct Dataset {
  std::string name;
  double strip_width = 0.0;  // y_max
  bool free_rotation = false;
  std::vector<double> rotations{0.0};  // explicit list; {0} when free
  std::vector<Piece> pieces;

  std::size_t total_quantity() const;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& piece_id, const std::string& what)
      : std::runtime_error("piece " + piece_id + ": " + what), piece_id_(piece_id) {}
  const std::string& piece_id() const { return piece_id_; }

 private:
  std::string piece_id_;
};

// JSON schema:
// {"name", "strip_width", "rotations": [deg...] | "free",
//  "pieces": [{"id", "quantity", "vertices": [[x, y], ...]}]}
Dataset parse_dataset(const std::string& path);
Dataset parse_dataset_text(const std::string& text, const std::string& origin = "<memory>");
std::string dataset_to_json(const Dataset& d);

// Angles 0, step, 2*step, ... below 360.
std::vector<double> rotations_from_step(double step_degrees);

}  // namespace seminest
