#include "seminest/placement.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>

namespace seminest {

std::vector<std::size_t> check_order(std::size_t last) {
  std::vector<std::size_t> order{0};
  if (last == 0) return order;
  order.push_back(last);
  std::deque<std::pair<std::size_t, std::size_t>> ranges{{0, last}};
  while (!ranges.empty()) {
    const auto [lo, hi] = ranges.front();
    ranges.pop_front();
    if (hi - lo < 2) continue;
    const std::size_t mid = lo + (hi - lo) / 2;
    order.push_back(mid);
    ranges.emplace_back(lo, mid);
    ranges.emplace_back(mid, hi);
  }
  return order;
}

PackedPiece pack_piece(const SemiDiscretePiece& sd) {
  PackedPiece p;
  p.width = sd.width;
  p.height = sd.height;
  p.rotation = sd.rotation;
  p.last_column = sd.num_columns() == 0 ? 0 : sd.num_columns() - 1;
  const double eps = 1e-12 * std::max({sd.width, sd.height, 1.0});
  for (std::size_t c : check_order(p.last_column)) {
    const auto& tuples = sd.columns[c].tuples;
    const auto seams = seams_above(tuples, eps);
    for (std::size_t q = 0; q < tuples.size(); ++q) {
      p.column.push_back(static_cast<std::uint32_t>(c));
      p.tuples.push_back(tuples[q]);
      p.seam_above.push_back(seams[q]);
    }
  }
  return p;
}

PlacementRecord place_piece(const StripState& strip, const PackedPiece& piece,
                            const TranslationVector& start) {
  PlacementRecord rec;
  rec.rotation = piece.rotation;
  rec.t = start;
  FitCounters counters;
  const std::size_t n = piece.tuples.size();
  for (;;) {
    bool updated = false;
    bool moved_right = false;
    for (std::size_t q = 0; q < n; ++q) {
      const StripColumn& col = strip.column(rec.t.m + piece.column[q]);
      const FitResult r = try_fit(col, piece.tuples[q], piece.seam_above[q], rec.t.y, strip.y_max, strip.eps, &counters);
      if (r.kind == FitKind::Fits) continue;
      ++rec.tv_updates;
      if (r.kind == FitKind::ShiftTo) {
        rec.t.y = r.y;
        updated = true;
        continue;
      }
      ++rec.t.m;
      rec.t.y = 0.0;
      ++rec.shift_rights;
      moved_right = true;
      break;
    }
    if (moved_right) continue;
    if (!updated) break;
  }
  rec.checks = counters.checks;
  rec.index_search_checks = counters.index_search_checks;
  return rec;
}

RotationChoice choose_rotation(const StripState& strip, const std::vector<RotationCandidate>& candidates) {
  RotationChoice choice;
  choice.records.reserve(candidates.size());
  const double eps = strip.eps;
  double best_x = std::numeric_limits<double>::infinity();
  double best_y = std::numeric_limits<double>::infinity();
  double best_angle = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const auto& c = candidates[k];
    PlacementRecord rec = place_piece(strip, *c.piece, c.start);
    rec.rotation = c.angle;
    const double x = static_cast<double>(rec.t.m) * strip.resolution + c.piece->width;
    const double y = rec.t.y + c.piece->height;
    bool better = false;
    if (x < best_x - eps) {
      better = true;
    } else if (x <= best_x + eps) {
      if (y < best_y - eps) {
        better = true;
      } else if (y <= best_y + eps && c.angle < best_angle) {
        better = true;
      }
    }
    if (better) {
      best_x = x;
      best_y = y;
      best_angle = c.angle;
      choice.winner = k;
    }
    choice.records.push_back(std::move(rec));
  }
  return choice;
}

double base_resolution(const std::vector<Piece>& pieces, double theta_degrees) {
  if (pieces.empty()) throw std::invalid_argument("base_resolution needs at least one piece");
  double pe = std::numeric_limits<double>::infinity();
  double smallest_area = std::numeric_limits<double>::infinity();
  double pp = 0.0;
  std::size_t ne = 0;
  for (const auto& piece : pieces) {
    const Polygon r = rotate(piece.polygon, theta_degrees);
    const double tol = 1e-9 * coordinate_scale(r);
    const std::size_t n = r.size();
    for (std::size_t k = 0; k < n; ++k) {
      const double dx = std::abs(r[(k + 1) % n].x - r[k].x);
      if (dx > tol) pe = std::min(pe, dx);
    }
    const Aabb box = aabb(r);
    const double a = box.width() * box.height();
    if (a < smallest_area) {
      smallest_area = a;
      pp = box.width();
      ne = n;
    }
  }
  if (!std::isfinite(pe)) throw std::domain_error("all edges are vertical");
  return std::max(pe, pp / static_cast<double>(ne));
}

double base_resolution(const std::vector<Piece>& pieces, const std::vector<double>& angles) {
  double r = std::numeric_limits<double>::infinity();
  for (double a : angles) r = std::min(r, base_resolution(pieces, a));
  return r;
}

std::vector<double> rotation_set(const Dataset& d, const Piece& p, const SolverConfig& config) {
  std::vector<double> angles = config.rotations.empty() ? p.allowed_rotations : config.rotations;
  if (angles.empty()) angles = d.rotations;
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
  return angles;
}

std::vector<Item> initial_order(const Dataset& d) {
  std::vector<Item> items;
  std::vector<double> areas;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    const Aabb box = aabb(d.pieces[i].polygon);
    for (int c = 0; c < d.pieces[i].quantity; ++c) {
      items.push_back({i, static_cast<std::size_t>(c), std::nullopt});
      areas.push_back(box.width() * box.height());
    }
  }
  std::vector<std::size_t> idx(items.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return areas[a] > areas[b]; });
  std::vector<Item> out;
  out.reserve(items.size());
  for (auto k : idx) out.push_back(items[k]);
  return out;
}

DiscretizationCache::DiscretizationCache(const Dataset& d, const SolverConfig& config)
    : dataset_(d), config_(config) {}

const DiscretizationCache::Entry& DiscretizationCache::entry(std::size_t piece, double angle) {
  const auto key = std::make_pair(piece, angle);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    const Piece& p = dataset_.pieces.at(piece);
    Entry e;
    e.sd = semidiscretize(p.polygon, angle, config_.resolution, config_.gap_closure, p.id);
    e.packed = pack_piece(e.sd);
    it = entries_.emplace(key, std::move(e)).first;
  }
  return it->second;
}

const SemiDiscretePiece& DiscretizationCache::sd(std::size_t piece, double angle) {
  return entry(piece, angle).sd;
}

const PackedPiece& DiscretizationCache::packed(std::size_t piece, double angle) {
  return entry(piece, angle).packed;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

Layout pack_items(const Dataset& d, const SolverConfig& config, const std::vector<Item>& items) {
  Layout layout;
  layout.strip = StripState(d.strip_width, config.resolution);
  DiscretizationCache cache(d, config);

  // Angles per item, restricted to those that fit the strip width.
  std::vector<std::vector<double>> angles(items.size());
  const auto t_disc = Clock::now();
  for (std::size_t k = 0; k < items.size(); ++k) {
    const Item& it = items[k];
    const Piece& p = d.pieces.at(it.piece_index);
    std::vector<double> all = it.rotation ? std::vector<double>{*it.rotation} : rotation_set(d, p, config);
    for (double a : all) {
      const SemiDiscretePiece& sd = cache.sd(it.piece_index, a);
      if (sd.height <= d.strip_width + layout.strip.eps) angles[k].push_back(a);
    }
    if (angles[k].empty()) {
      throw PieceTooWide("piece " + p.id + " is taller than the strip in every allowed rotation");
    }
  }
  layout.disc_ms = ms_since(t_disc);

  const auto t_place = Clock::now();
  std::map<double, TranslationVector> warm;
  std::size_t previous_piece = std::numeric_limits<std::size_t>::max();
  std::vector<RotationCandidate> cands;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const Item& it = items[k];
    const bool same_shape = config.warm_start && it.piece_index == previous_piece;
    if (!same_shape) warm.clear();
    cands.clear();
    for (double a : angles[k]) {
      RotationCandidate c;
      c.angle = a;
      c.piece = &cache.packed(it.piece_index, a);
      auto w = warm.find(a);
      if (w != warm.end()) c.start = w->second;
      cands.push_back(c);
    }
    RotationChoice choice = choose_rotation(layout.strip, cands);
    for (std::size_t c = 0; c < cands.size(); ++c) warm[cands[c].angle] = choice.records[c].t;
    PlacementRecord rec = choice.records[choice.winner];
    for (const auto& r : choice.records) {
      layout.checks += r.checks;
      layout.index_search_checks += r.index_search_checks;
      layout.tv_updates += r.tv_updates;
    }
    rec.piece_id = d.pieces[it.piece_index].id;
    rec.piece_index = it.piece_index;
    rec.copy = it.copy;
    commit(layout.strip, cache.sd(it.piece_index, rec.rotation), rec.t);
    layout.placements.push_back(std::move(rec));
    previous_piece = it.piece_index;
  }
  layout.place_ms = ms_since(t_place);
  layout.length = used_length(layout.strip);
  return layout;
}

Layout pack(const Dataset& d, const SolverConfig& config) { return pack_items(d, config, initial_order(d)); }

}  // namespace seminest
