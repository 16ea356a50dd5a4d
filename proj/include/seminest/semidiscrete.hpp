#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "seminest/geometry.hpp"

namespace seminest {

// Position label as a set of occupied sides: L means the shape lies to the
// left of the line only, R to the right only, M on both sides. Union of L
// and R is M, and two labels are compatible exactly when they are disjoint.
enum class Label : std::uint8_t { L = 1, R = 2, M = 3 };

inline constexpr std::uint8_t sides(Label l) { return static_cast<std::uint8_t>(l); }
inline constexpr Label label_from_sides(std::uint8_t s) { return static_cast<Label>(s); }
inline constexpr bool complementary(Label a, Label b) { return (sides(a) & sides(b)) == 0; }
char label_char(Label l);

struct IntervalTuple {
  double b = 0.0;
  double t = 0.0;
  Label label = Label::M;

  bool degenerate() const { return b == t; }
  friend bool operator==(const IntervalTuple&, const IntervalTuple&) = default;
};

// Identifiers of the boundary chains that bound a tuple. A chain is a
// maximal piece of the polygon boundary inside one open slab between two
// neighbouring resolution lines; tuples on neighbouring lines that share a
// chain lie between the same edges of the piece.
using ChainSet = std::vector<std::uint64_t>;

struct Column {
  std::vector<IntervalTuple> tuples;
  std::vector<ChainSet> chains;  // parallel to tuples, may be empty
};

enum class GapClosure { ZeroLengthOnly, AllInterior };

struct SemiDiscretePiece {
  std::vector<Column> columns;  // column i lies on x = i * resolution
  double resolution = 1.0;
  std::string source_id;
  double rotation = 0.0;
  double width = 0.0;   // bounding box of the rotated polygon
  double height = 0.0;

  std::size_t num_columns() const { return columns.size(); }
  std::size_t num_tuples() const;
};

class SemiDiscreteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Active-edge update cases, counted per vertex.
enum class SweepCase { AddBoth, Swap, RemoveBoth, VerticalAdd, VerticalRemove };

struct SweepState {
  std::vector<double> events;
  std::size_t processed = 0;            // events consumed so far
  std::vector<std::size_t> active_edges;  // edge k joins vertex k and k+1, bottom to top
  std::array<int, 5> case_counts{};
};

std::vector<double> build_events(const Polygon& p);

SweepState start_sweep(const Polygon& p);

// Consumes the next event, which must equal `event`, and updates the active
// edges. Vertical edges never become active.
void advance_sweep(const Polygon& p, SweepState& state, double event);

// y of every active edge at x, ascending. x must lie inside the span of the
// current active set.
std::vector<double> column_ypoints(const Polygon& p, const SweepState& state, double x);

// Raw intervals on a line through an event: the closures of the cross
// sections just left and just right of the line. Their side-set union gives
// the labelled column.
struct EventLineIntervals {
  std::vector<std::pair<double, double>> left;
  std::vector<std::pair<double, double>> right;
};
EventLineIntervals event_line_intervals(const Polygon& p, const std::vector<std::size_t>& before,
                                        const std::vector<std::size_t>& after, double x);

// Number of resolution lines minus one for a width at resolution R.
std::size_t last_line_index(double width, double resolution);

// Sweep only: every column carries the exact labelled cross section of the
// closed polygon.
SemiDiscretePiece discretize(const Polygon& p, double resolution);

// Adds projections for convex vertices that lie strictly between lines.
SemiDiscretePiece extend_convex_vertices(const SemiDiscretePiece& sd, const Polygon& p);

// Makes tuples on neighbouring lines that share a chain overlap.
// ZeroLengthOnly closes gaps of zero-length tuples. AllInterior requires every
// linked pair to overlap in a positive-length range, which also closes slits
// that two touching tuples would leave open.
SemiDiscretePiece close_gaps(const SemiDiscretePiece& sd, GapClosure scope);

// Unions overlapping tuples and joins touching tuples with equal labels.
SemiDiscretePiece join_tuples(const SemiDiscretePiece& sd);

SemiDiscretePiece semidiscretize(const Polygon& normalized, double theta_degrees,
                                 double resolution, GapClosure scope,
                                 const std::string& source_id = {});

// Side-set union of closed intervals into an ordered, labelled column.
// Breakpoints closer than eps are snapped together.
struct SidedInterval {
  double b = 0.0;
  double t = 0.0;
  std::uint8_t sides = 0;
  ChainSet chains;
};
Column normalize_column(const std::vector<SidedInterval>& in, double eps, bool keep_chains);

// `i: (b,t,LABEL) ...` per column.
std::string dump(const SemiDiscretePiece& sd);

}  // namespace seminest
