#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "seminest/dataset.hpp"
#include "seminest/placement.hpp"

namespace seminest {

struct Candidate {
  std::vector<Item> order;  // expanded copies; Item::rotation holds overrides
  double score = 0.0;       // strip length
};

struct SearchConfig {
  int iterations = 100;
  std::uint64_t seed = 1;
  double swap_pair = 2.0;
  double relocate_one = 1.0;
  double flip_rotation = 1.0;
};

struct SearchStep {
  int iter = 0;
  double score = 0.0;  // length of the mutated candidate
  bool accepted = false;
};

struct SearchResult {
  Candidate best;
  Layout layout;
  double initial_score = 0.0;
  std::vector<SearchStep> log;
};

// Starts from the bounding-box order, mutates one step per iteration and keeps
// the mutation only when the strip gets strictly shorter. The observer sees
// every mutated layout, accepted or not.
SearchResult hill_climb(const Dataset& d, const SolverConfig& solver, const SearchConfig& search,
                        const std::function<void(const SearchStep&, const Layout&)>& observer = {});

}  // namespace seminest
