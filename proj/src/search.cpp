#include "seminest/search.hpp"

#include <random>
#include <stdexcept>

namespace seminest {

SearchResult hill_climb(const Dataset& d, const SolverConfig& solver, const SearchConfig& search,
                        const std::function<void(const SearchStep&, const Layout&)>& observer) {
  if (search.iterations < 0) throw std::invalid_argument("iterations must be non-negative");
  if (search.swap_pair < 0 || search.relocate_one < 0 || search.flip_rotation < 0 ||
      search.swap_pair + search.relocate_one + search.flip_rotation <= 0) {
    throw std::invalid_argument("mutation weights must be non-negative and not all zero");
  }

  SearchResult res;
  res.best.order = initial_order(d);
  res.layout = pack_items(d, solver, res.best.order);
  res.best.score = res.layout.length;
  res.initial_score = res.best.score;

  std::mt19937_64 rng(search.seed);
  std::discrete_distribution<int> pick({search.swap_pair, search.relocate_one, search.flip_rotation});
  const std::size_t n = res.best.order.size();

  for (int it = 1; it <= search.iterations; ++it) {
    std::vector<Item> order = res.best.order;
    if (n >= 1) {
      std::uniform_int_distribution<std::size_t> pos(0, n - 1);
      switch (pick(rng)) {
        case 0: {
          const std::size_t a = pos(rng), b = pos(rng);
          std::swap(order[a], order[b]);
          break;
        }
        case 1: {
          const std::size_t a = pos(rng), b = pos(rng);
          const Item moved = order[a];
          order.erase(order.begin() + static_cast<std::ptrdiff_t>(a));
          order.insert(order.begin() + static_cast<std::ptrdiff_t>(b), moved);
          break;
        }
        default: {
          const std::size_t a = pos(rng);
          const auto angles = rotation_set(d, d.pieces[order[a].piece_index], solver);
          if (angles.size() < 2) break;
          // The current angle is the override or whatever the greedy picked.
          const double current = order[a].rotation ? *order[a].rotation : res.layout.placements[a].rotation;
          std::vector<double> others;
          for (double x : angles) {
            if (x != current) others.push_back(x);
          }
          std::uniform_int_distribution<std::size_t> o(0, others.size() - 1);
          order[a].rotation = others[o(rng)];
          break;
        }
      }
    }
    Layout layout;
    SearchStep step{it, 0.0, false};
    try {
      layout = pack_items(d, solver, order);
      step.score = layout.length;
      step.accepted = layout.length < res.best.score;
    } catch (const PieceTooWide&) {
      step.score = res.best.score;  // forced angle does not fit; rejected
    }
    res.log.push_back(step);
    if (observer) observer(step, layout);
    if (step.accepted) {
      res.best.order = std::move(order);
      res.best.score = layout.length;
      res.layout = std::move(layout);
    }
  }
  return res;
}

}  // namespace seminest
