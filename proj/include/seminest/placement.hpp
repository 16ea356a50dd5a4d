#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seminest/dataset.hpp"
#include "seminest/semidiscrete.hpp"
#include "seminest/strip.hpp"

namespace seminest {

struct PlacementRecord {
  std::string piece_id;
  std::size_t piece_index = 0;  // into Dataset::pieces
  std::size_t copy = 0;
  double rotation = 0.0;
  TranslationVector t;
  std::uint64_t checks = 0;
  std::uint64_t index_search_checks = 0;
  std::uint64_t tv_updates = 0;
  std::uint64_t shift_rights = 0;
};

struct SolverConfig {
  double resolution = 1.0;
  // Angles tried for every piece. Empty means each piece's allowed list.
  std::vector<double> rotations;
  GapClosure gap_closure = GapClosure::AllInterior;
  bool warm_start = true;
};

class PieceTooWide : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Piece tuples flattened in check order, bottom tuple first per column.
struct PackedPiece {
  std::vector<std::uint32_t> column;  // column offset within the piece
  std::vector<IntervalTuple> tuples;
  std::vector<std::uint8_t> seam_above;  // seams_above within the tuple's column
  double width = 0.0;
  double height = 0.0;
  double rotation = 0.0;
  std::size_t last_column = 0;
};

std::vector<std::size_t> check_order(std::size_t last);

PackedPiece pack_piece(const SemiDiscretePiece& sd);

// Lexicographically smallest (m, y) >= start at which the piece fits.
PlacementRecord place_piece(const StripState& strip, const PackedPiece& piece,
                            const TranslationVector& start);

struct RotationCandidate {
  double angle = 0.0;
  const PackedPiece* piece = nullptr;
  TranslationVector start;
};

// Index of the winning candidate and every candidate's record.
struct RotationChoice {
  std::size_t winner = 0;
  std::vector<PlacementRecord> records;
};
RotationChoice choose_rotation(const StripState& strip, const std::vector<RotationCandidate>& candidates);

// max{P_e, P_p / n_e} for one rotation angle.
double base_resolution(const std::vector<Piece>& pieces, double theta_degrees);
// Smallest base resolution over a set of angles.
double base_resolution(const std::vector<Piece>& pieces, const std::vector<double>& angles);

struct Item {
  std::size_t piece_index = 0;
  std::size_t copy = 0;
  std::optional<double> rotation;  // forced angle
};

struct Layout {
  std::vector<PlacementRecord> placements;
  StripState strip;
  double length = 0.0;
  double disc_ms = 0.0;
  double place_ms = 0.0;
  std::uint64_t checks = 0;
  std::uint64_t index_search_checks = 0;
  std::uint64_t tv_updates = 0;
};

// Angles considered for one piece under a config.
std::vector<double> rotation_set(const Dataset& d, const Piece& p, const SolverConfig& config);

// Copies expanded and sorted by decreasing bounding-box area, ties in input order.
std::vector<Item> initial_order(const Dataset& d);

// Semi-discrete pieces for every (piece, angle) pair, computed once.
class DiscretizationCache {
 public:
  DiscretizationCache(const Dataset& d, const SolverConfig& config);
  const SemiDiscretePiece& sd(std::size_t piece, double angle);
  const PackedPiece& packed(std::size_t piece, double angle);

 private:
  struct Entry {
    SemiDiscretePiece sd;
    PackedPiece packed;
  };
  const Entry& entry(std::size_t piece, double angle);

  const Dataset& dataset_;
  SolverConfig config_;
  std::map<std::pair<std::size_t, double>, Entry> entries_;
};

Layout pack_items(const Dataset& d, const SolverConfig& config, const std::vector<Item>& items);
Layout pack(const Dataset& d, const SolverConfig& config);

}  // namespace seminest
