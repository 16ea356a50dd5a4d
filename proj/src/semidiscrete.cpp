#include "seminest/semidiscrete.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "seminest/kernels.hpp"

namespace seminest {

namespace {

constexpr double kSnapRelative = 1e-9;
constexpr double kBreakpointRelative = 1e-12;

std::size_t next_index(std::size_t k, std::size_t n) { return k + 1 == n ? 0 : k + 1; }
std::size_t prev_index(std::size_t k, std::size_t n) { return k == 0 ? n - 1 : k - 1; }

struct EdgeView {
  Point lo;
  Point hi;
  double slope = 0.0;
  bool vertical = false;
};

EdgeView edge_view(const Polygon& p, std::size_t k) {
  const Point& a = p[k];
  const Point& b = p[next_index(k, p.size())];
  EdgeView e;
  e.lo = a.x <= b.x ? a : b;
  e.hi = a.x <= b.x ? b : a;
  e.vertical = a.x == b.x;
  if (!e.vertical) e.slope = (e.hi.y - e.lo.y) / (e.hi.x - e.lo.x);
  return e;
}

double clamp_to_edge(const EdgeView& e, double y) {
  const double lo = std::min(e.lo.y, e.hi.y);
  const double hi = std::max(e.lo.y, e.hi.y);
  return std::clamp(y, lo, hi);
}

// Endpoints are returned exactly so that intervals meeting at a vertex
// share the same breakpoint bit for bit.
double edge_y(const EdgeView& e, double x) {
  if (x == e.lo.x) return e.lo.y;
  if (x == e.hi.x) return e.hi.y;
  return clamp_to_edge(e, e.lo.y + (x - e.lo.x) * e.slope);
}

double snap_eps(double width) { return kSnapRelative * std::max(width, 1e-300); }

// Index of the line a value snaps to, or -1.
long snapped_line(double x, double resolution, double eps, std::size_t last) {
  const double q = std::round(x / resolution);
  if (q < 0.0 || q > static_cast<double>(last)) return -1;
  return std::abs(q * resolution - x) <= eps ? static_cast<long>(q) : -1;
}

// Union-find over (edge, slab) pieces of the boundary.
class ChainIndex {
 public:
  ChainIndex(std::size_t stride) : stride_(stride) {}

  std::uint64_t key(std::size_t edge, std::size_t slab) const {
    return static_cast<std::uint64_t>(edge) * stride_ + slab;
  }

  std::uint64_t find(std::uint64_t k) const {
    auto it = parent_.find(k);
    while (it != parent_.end() && it->second != k) {
      k = it->second;
      it = parent_.find(k);
    }
    return k;
  }

  void unite(std::uint64_t a, std::uint64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[a] = a;
    parent_[b] = a;
  }

  std::uint64_t chain(std::size_t edge, std::size_t slab) const { return find(key(edge, slab)); }

 private:
  std::size_t stride_;
  std::unordered_map<std::uint64_t, std::uint64_t> parent_;
};

void add_chain(ChainSet& c, std::uint64_t id) {
  auto it = std::lower_bound(c.begin(), c.end(), id);
  if (it == c.end() || *it != id) c.insert(it, id);
}

void merge_chains(ChainSet& into, const ChainSet& from) {
  for (auto id : from) add_chain(into, id);
}

bool share_chain(const ChainSet& a, const ChainSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

struct Context {
  const Polygon& p;
  double resolution;
  double width;
  double height;
  double eps_x;
  std::size_t last;
  ChainIndex chains;

  Context(const Polygon& poly, double r)
      : p(poly),
        resolution(r),
        width(bounds(poly).width()),
        height(bounds(poly).height()),
        eps_x(snap_eps(bounds(poly).width())),
        last(last_line_index(bounds(poly).width(), r)),
        chains(last + 1) {
    const std::size_t n = p.size();
    for (std::size_t v = 0; v < n; ++v) {
      if (snapped_line(p[v].x, resolution, eps_x, last) >= 0) continue;
      const std::size_t s = slab_of(p[v].x);
      chains.unite(chains.key(prev_index(v, n), s), chains.key(v, s));
    }
  }

  std::size_t slab_of(double x) const {
    const double f = std::floor(x / resolution);
    const double hi = last == 0 ? 0.0 : static_cast<double>(last - 1);
    return static_cast<std::size_t>(std::clamp(f, 0.0, hi));
  }

  double breakpoint_eps() const { return kBreakpointRelative * std::max({width, height, 1.0}); }

  // Chains of edge k touching line i from the left and/or right slab.
  void line_chains(ChainSet& out, std::size_t edge, std::size_t line, bool left, bool right) const {
    if (left && line >= 1 && line - 1 < last) add_chain(out, chains.chain(edge, line - 1));
    if (right && line < last) add_chain(out, chains.chain(edge, line));
  }
};

void pair_intervals(const Context& ctx, const std::vector<std::size_t>& edges,
                    const std::vector<double>& ys, std::size_t line, std::uint8_t side_set,
                    std::vector<SidedInterval>& out) {
  if (ys.size() % 2 != 0) throw SemiDiscreteError("odd number of edge intersections on a line");
  for (std::size_t j = 0; j + 1 < ys.size(); j += 2) {
    SidedInterval si;
    si.b = std::min(ys[j], ys[j + 1]);
    si.t = std::max(ys[j], ys[j + 1]);
    si.sides = side_set;
    const bool left = (side_set & sides(Label::L)) != 0;
    const bool right = (side_set & sides(Label::R)) != 0;
    ctx.line_chains(si.chains, edges[j], line, left, right);
    ctx.line_chains(si.chains, edges[j + 1], line, left, right);
    out.push_back(std::move(si));
  }
}

std::vector<std::size_t> sorted_by_y(const Polygon& p, std::vector<std::size_t> edges, double x) {
  std::vector<double> key(p.size());
  for (auto k : edges) key[k] = edge_y(edge_view(p, k), x);
  std::stable_sort(edges.begin(), edges.end(),
                   [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  return edges;
}

void line_from_event(const Context& ctx, const std::vector<std::size_t>& before,
                     const std::vector<std::size_t>& after, double x_left, double x_right,
                     std::size_t line, std::vector<SidedInterval>& out) {
  auto collect = [&](const std::vector<std::size_t>& active, double x, std::uint8_t s) {
    const auto ordered = sorted_by_y(ctx.p, active, x);
    std::vector<double> ys;
    ys.reserve(ordered.size());
    for (auto k : ordered) ys.push_back(edge_y(edge_view(ctx.p, k), x));
    pair_intervals(ctx, ordered, ys, line, s, out);
  };
  collect(before, x_left, sides(Label::L));
  collect(after, x_right, sides(Label::R));
}

void lines_inside_slab(const Context& ctx, const std::vector<std::size_t>& active, std::size_t first,
                       std::size_t count, std::vector<std::vector<SidedInterval>>& raw) {
  if (count == 0 || active.empty()) return;
  std::vector<double> buffer(active.size() * count);
  for (std::size_t j = 0; j < active.size(); ++j) {
    const EdgeView e = edge_view(ctx.p, active[j]);
    kernels::edge_on_lines(e.lo.x, e.lo.y, e.slope, ctx.resolution, static_cast<std::int64_t>(first),
                           count, buffer.data() + j * count);
    for (std::size_t l = 0; l < count; ++l) {
      double& y = buffer[j * count + l];
      y = clamp_to_edge(e, y);
    }
  }
  std::vector<double> ys(active.size());
  for (std::size_t l = 0; l < count; ++l) {
    for (std::size_t j = 0; j < active.size(); ++j) ys[j] = buffer[j * count + l];
    pair_intervals(ctx, active, ys, first + l, sides(Label::M), raw[first + l]);
  }
}

SemiDiscretePiece make_shell(const Context& ctx) {
  SemiDiscretePiece sd;
  sd.resolution = ctx.resolution;
  sd.width = ctx.width;
  sd.height = ctx.height;
  sd.columns.resize(ctx.last + 1);
  return sd;
}

std::vector<SidedInterval> to_sided(const Column& c) {
  std::vector<SidedInterval> out;
  out.reserve(c.tuples.size());
  for (std::size_t j = 0; j < c.tuples.size(); ++j) {
    SidedInterval si{c.tuples[j].b, c.tuples[j].t, sides(c.tuples[j].label), {}};
    if (j < c.chains.size()) si.chains = c.chains[j];
    out.push_back(std::move(si));
  }
  return out;
}

double piece_eps(const SemiDiscretePiece& sd) {
  return kBreakpointRelative * std::max({sd.width, sd.height, 1.0});
}

}  // namespace

char label_char(Label l) {
  switch (l) {
    case Label::L: return 'L';
    case Label::R: return 'R';
    case Label::M: return 'M';
  }
  return '?';
}

std::size_t SemiDiscretePiece::num_tuples() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.tuples.size();
  return n;
}

std::size_t last_line_index(double width, double resolution) {
  if (!(resolution > 0.0)) throw SemiDiscreteError("resolution must be positive");
  const double eps = snap_eps(width);
  const double q = std::ceil((width - eps) / resolution);
  return q <= 0.0 ? 0 : static_cast<std::size_t>(q);
}

std::vector<double> build_events(const Polygon& p) {
  std::vector<double> xs;
  xs.reserve(p.size());
  for (const auto& v : p.vertices) xs.push_back(v.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

SweepState start_sweep(const Polygon& p) {
  SweepState s;
  s.events = build_events(p);
  return s;
}

void advance_sweep(const Polygon& p, SweepState& state, double event) {
  if (state.processed >= state.events.size() || state.events[state.processed] != event) {
    throw SemiDiscreteError("sweep events must be consumed in order");
  }
  const std::size_t n = p.size();
  auto& active = state.active_edges;
  auto remove = [&](std::size_t k) {
    auto it = std::find(active.begin(), active.end(), k);
    if (it == active.end()) throw SemiDiscreteError("internal order violation: edge not active");
    active.erase(it);
  };
  enum Dir { Left, Right, Vertical };
  auto dir = [&](std::size_t edge, std::size_t v) {
    const Point& other = p[edge == v ? next_index(v, n) : v == 0 ? n - 1 : v - 1];
    if (other.x > event) return Right;
    if (other.x < event) return Left;
    return Vertical;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (p[v].x != event) continue;
    const std::size_t e_in = prev_index(v, n);
    const std::size_t e_out = v;
    const Dir d_in = dir(e_in, v);
    const Dir d_out = dir(e_out, v);
    if (d_in == Right && d_out == Right) {
      active.push_back(e_in);
      active.push_back(e_out);
      ++state.case_counts[static_cast<int>(SweepCase::AddBoth)];
    } else if (d_in == Left && d_out == Left) {
      remove(e_in);
      remove(e_out);
      ++state.case_counts[static_cast<int>(SweepCase::RemoveBoth)];
    } else if ((d_in == Left && d_out == Right) || (d_in == Right && d_out == Left)) {
      remove(d_in == Left ? e_in : e_out);
      active.push_back(d_in == Right ? e_in : e_out);
      ++state.case_counts[static_cast<int>(SweepCase::Swap)];
    } else if (d_in == Vertical && d_out == Vertical) {
      throw SemiDiscreteError("internal order violation: consecutive vertical edges");
    } else {
      const bool in_vertical = d_in == Vertical;
      const std::size_t other = in_vertical ? e_out : e_in;
      const Dir d = in_vertical ? d_out : d_in;
      if (d == Right) {
        active.push_back(other);
        ++state.case_counts[static_cast<int>(SweepCase::VerticalAdd)];
      } else {
        remove(other);
        ++state.case_counts[static_cast<int>(SweepCase::VerticalRemove)];
      }
    }
  }
  ++state.processed;
  if (active.size() % 2 != 0) throw SemiDiscreteError("internal order violation: odd active set");
  if (state.processed < state.events.size()) {
    const double mid = 0.5 * (event + state.events[state.processed]);
    active = sorted_by_y(p, active, mid);
  } else if (!active.empty()) {
    throw SemiDiscreteError("internal order violation: edges left after last event");
  }
}

std::vector<double> column_ypoints(const Polygon& p, const SweepState& state, double x) {
  std::vector<double> ys;
  ys.reserve(state.active_edges.size());
  for (auto k : state.active_edges) ys.push_back(edge_y(edge_view(p, k), x));
  std::sort(ys.begin(), ys.end());
  if (ys.size() % 2 != 0) throw SemiDiscreteError("odd intersection count");
  return ys;
}

EventLineIntervals event_line_intervals(const Polygon& p, const std::vector<std::size_t>& before,
                                        const std::vector<std::size_t>& after, double x) {
  EventLineIntervals out;
  auto pairs = [&](const std::vector<std::size_t>& active) {
    std::vector<double> ys;
    for (auto k : active) ys.push_back(edge_y(edge_view(p, k), x));
    std::sort(ys.begin(), ys.end());
    if (ys.size() % 2 != 0) throw SemiDiscreteError("odd intersection count");
    std::vector<std::pair<double, double>> r;
    for (std::size_t j = 0; j + 1 < ys.size(); j += 2) r.emplace_back(ys[j], ys[j + 1]);
    return r;
  };
  out.left = pairs(before);
  out.right = pairs(after);
  return out;
}

Column normalize_column(const std::vector<SidedInterval>& in, double eps, bool keep_chains) {
  Column out;
  if (in.empty()) return out;

  std::vector<double> ys;
  ys.reserve(in.size() * 2);
  for (const auto& si : in) {
    ys.push_back(si.b);
    ys.push_back(si.t);
  }
  std::sort(ys.begin(), ys.end());
  // Cluster breakpoints closer than eps onto the lowest member.
  std::vector<double> reps;
  for (double y : ys) {
    if (reps.empty() || y - reps.back() > eps) reps.push_back(y);
  }
  auto rep_index = [&](double y) {
    auto it = std::upper_bound(reps.begin(), reps.end(), y);
    return static_cast<std::size_t>(std::distance(reps.begin(), it)) - 1;
  };

  const std::size_t K = reps.size();
  // Per-side coverage counts for points and open gaps, via difference arrays.
  std::vector<int> point_l(K + 1, 0), point_r(K + 1, 0), open_l(K + 1, 0), open_r(K + 1, 0);
  std::vector<std::pair<std::size_t, std::size_t>> span(in.size());
  for (std::size_t j = 0; j < in.size(); ++j) {
    const std::size_t kb = rep_index(in[j].b);
    const std::size_t kt = std::max(kb, rep_index(in[j].t));
    span[j] = {kb, kt};
    const bool l = (in[j].sides & sides(Label::L)) != 0;
    const bool r = (in[j].sides & sides(Label::R)) != 0;
    if (l) { ++point_l[kb]; --point_l[kt + 1]; }
    if (r) { ++point_r[kb]; --point_r[kt + 1]; }
    if (kt > kb) {
      if (l) { ++open_l[kb]; --open_l[kt]; }
      if (r) { ++open_r[kb]; --open_r[kt]; }
    }
  }
  std::vector<std::uint8_t> point_set(K), open_set(K, 0);
  int pl = 0, pr = 0, ol = 0, orr = 0;
  for (std::size_t k = 0; k < K; ++k) {
    pl += point_l[k];
    pr += point_r[k];
    ol += open_l[k];
    orr += open_r[k];
    point_set[k] = static_cast<std::uint8_t>((pl > 0 ? 1 : 0) | (pr > 0 ? 2 : 0));
    open_set[k] = static_cast<std::uint8_t>((ol > 0 ? 1 : 0) | (orr > 0 ? 2 : 0));
  }

  struct Piece {
    std::size_t kb, kt;
    std::uint8_t s;
  };
  std::vector<Piece> pieces;
  bool run_open = false;
  std::size_t run_start = 0;
  std::uint8_t run_set = 0;
  for (std::size_t k = 0; k < K; ++k) {
    const std::uint8_t P = point_set[k];
    const std::uint8_t below = k > 0 ? open_set[k - 1] : 0;
    const std::uint8_t above = k + 1 < K ? open_set[k] : 0;
    if (run_open && (above != run_set || P != run_set)) {
      pieces.push_back({run_start, k, run_set});
      run_open = false;
    }
    if (P != 0 && (P & static_cast<std::uint8_t>(~(below | above))) != 0) {
      pieces.push_back({k, k, P});
    }
    if (!run_open && above != 0) {
      run_open = true;
      run_start = k;
      run_set = above;
    }
  }

  out.tuples.reserve(pieces.size());
  for (const auto& pc : pieces) {
    out.tuples.push_back({reps[pc.kb], reps[pc.kt], label_from_sides(pc.s)});
  }
  if (keep_chains) {
    out.chains.resize(pieces.size());
    for (std::size_t j = 0; j < in.size(); ++j) {
      if (in[j].chains.empty()) continue;
      const auto [kb, kt] = span[j];
      for (std::size_t q = 0; q < pieces.size(); ++q) {
        const auto& pc = pieces[q];
        const bool positive = std::min(kt, pc.kt) > std::max(kb, pc.kb);
        const bool point_in = (kb == kt && pc.kb <= kb && kb <= pc.kt) ||
                              (pc.kb == pc.kt && kb <= pc.kb && pc.kb <= kt);
        if (positive || point_in) merge_chains(out.chains[q], in[j].chains);
      }
    }
  }
  return out;
}

SemiDiscretePiece discretize(const Polygon& p, double resolution) {
  Context ctx(p, resolution);
  SemiDiscretePiece sd = make_shell(ctx);
  std::vector<std::vector<SidedInterval>> raw(ctx.last + 1);

  SweepState state = start_sweep(p);
  const auto& events = state.events;

  // Event index snapped to each line, first and last when several collapse.
  std::vector<long> first_event(ctx.last + 1, -1), last_event(ctx.last + 1, -1);
  for (std::size_t k = 0; k < events.size(); ++k) {
    const long li = snapped_line(events[k], resolution, ctx.eps_x, ctx.last);
    if (li < 0) continue;
    if (first_event[li] < 0) first_event[li] = static_cast<long>(k);
    last_event[li] = static_cast<long>(k);
  }

  auto x_of = [&](std::size_t i) { return static_cast<double>(i) * resolution; };
  std::size_t next_line = 0;
  std::vector<std::size_t> before_first;
  for (std::size_t k = 0; k < events.size(); ++k) {
    const double e = events[k];
    // Lines strictly inside the slab that ends at this event.
    std::size_t first = next_line;
    std::size_t count = 0;
    while (next_line <= ctx.last && x_of(next_line) < e - ctx.eps_x && first_event[next_line] < 0) {
      ++next_line;
      ++count;
    }
    lines_inside_slab(ctx, state.active_edges, first, count, raw);

    const long li = snapped_line(e, resolution, ctx.eps_x, ctx.last);
    if (li >= 0 && first_event[li] == static_cast<long>(k)) before_first = state.active_edges;
    advance_sweep(p, state, e);
    if (li >= 0 && last_event[li] == static_cast<long>(k)) {
      const double x_left = events[static_cast<std::size_t>(first_event[li])];
      line_from_event(ctx, before_first, state.active_edges, x_left, e, static_cast<std::size_t>(li),
                      raw[li]);
      next_line = static_cast<std::size_t>(li) + 1;
    }
  }

  const double eps = ctx.breakpoint_eps();
  for (std::size_t i = 0; i <= ctx.last; ++i) sd.columns[i] = normalize_column(raw[i], eps, true);
  return sd;
}

SemiDiscretePiece extend_convex_vertices(const SemiDiscretePiece& sd, const Polygon& p) {
  Context ctx(p, sd.resolution);
  SemiDiscretePiece out = sd;
  if (ctx.last == 0) return out;
  std::vector<std::vector<SidedInterval>> extra(sd.num_columns());
  const std::size_t n = p.size();
  auto x_of = [&](std::size_t i) { return static_cast<double>(i) * ctx.resolution; };

  for (std::size_t v = 0; v < n; ++v) {
    if (snapped_line(p[v].x, ctx.resolution, ctx.eps_x, ctx.last) >= 0) continue;
    if (vertex_kind(p, v) != VertexKind::Convex) continue;
    const std::size_t s = ctx.slab_of(p[v].x);
    const double xl = x_of(s);
    const double xr = x_of(s + 1);
    const double yv = p[v].y;
    const ChainSet chain{ctx.chains.chain(v, s)};
    for (std::size_t edge : {prev_index(v, n), v}) {
      const Point& w = p[edge == v ? next_index(v, n) : prev_index(v, n)];
      const EdgeView e = edge_view(p, edge);
      if (w.x <= xl + ctx.eps_x) {
        const double ya = std::abs(w.x - xl) <= ctx.eps_x ? w.y : edge_y(e, xl);
        extra[s].push_back({std::min(ya, yv), std::max(ya, yv), sides(Label::R), chain});
        extra[s + 1].push_back({yv, yv, sides(Label::L), chain});
      } else if (w.x >= xr - ctx.eps_x) {
        const double ya = std::abs(w.x - xr) <= ctx.eps_x ? w.y : edge_y(e, xr);
        extra[s + 1].push_back({std::min(ya, yv), std::max(ya, yv), sides(Label::L), chain});
        extra[s].push_back({yv, yv, sides(Label::R), chain});
      } else {
        const double lo = std::min(yv, w.y);
        const double hi = std::max(yv, w.y);
        extra[s].push_back({lo, hi, sides(Label::R), chain});
        extra[s + 1].push_back({lo, hi, sides(Label::L), chain});
      }
    }
  }

  const double eps = piece_eps(sd);
  for (std::size_t i = 0; i < out.columns.size(); ++i) {
    if (extra[i].empty()) continue;
    auto merged = to_sided(out.columns[i]);
    for (auto& si : extra[i]) merged.push_back(std::move(si));
    out.columns[i] = normalize_column(merged, eps, true);
  }
  return out;
}

SemiDiscretePiece close_gaps(const SemiDiscretePiece& sd, GapClosure scope) {
  SemiDiscretePiece out = sd;
  const double eps = piece_eps(sd);
  const std::size_t cols = sd.num_columns();
  bool any = false;

  for (std::size_t i = 0; i < cols; ++i) {
    const Column& col = sd.columns[i];
    for (std::size_t j = 0; j < col.tuples.size(); ++j) {
      const IntervalTuple T = col.tuples[j];
      if (scope == GapClosure::ZeroLengthOnly && !T.degenerate()) continue;
      if (j >= col.chains.size() || col.chains[j].empty()) continue;
      IntervalTuple grown = T;
      for (int side : {-1, 1}) {
        if ((side < 0 && i == 0) || (side > 0 && i + 1 >= cols)) continue;
        const Column& nb = sd.columns[static_cast<std::size_t>(static_cast<long>(i) + side)];
        const IntervalTuple* nearest = nullptr;
        double best = 0.0;
        bool satisfied = false;
        for (std::size_t q = 0; q < nb.tuples.size(); ++q) {
          if (q >= nb.chains.size() || !share_chain(col.chains[j], nb.chains[q])) continue;
          const IntervalTuple& U = nb.tuples[q];
          const bool ok = scope == GapClosure::ZeroLengthOnly
                              ? (U.b <= T.t + eps && T.b <= U.t + eps)
                              : (U.b < T.t - eps && T.b < U.t - eps);
          if (ok) {
            satisfied = true;
            break;
          }
          const double dist = std::max({0.0, U.b - T.t, T.b - U.t});
          if (nearest == nullptr || dist < best) {
            nearest = &U;
            best = dist;
          }
        }
        if (satisfied || nearest == nullptr) continue;
        double target;
        if (scope == GapClosure::ZeroLengthOnly) {
          target = nearest->b > T.t ? nearest->b : nearest->t;
        } else {
          target = 0.5 * (nearest->b + nearest->t);
        }
        grown.b = std::min(grown.b, target);
        grown.t = std::max(grown.t, target);
      }
      if (grown.b != T.b || grown.t != T.t) {
        out.columns[i].tuples[j] = grown;
        any = true;
      }
    }
  }
  if (!any) return out;
  for (auto& c : out.columns) c = normalize_column(to_sided(c), eps, true);
  return out;
}

SemiDiscretePiece join_tuples(const SemiDiscretePiece& sd) {
  SemiDiscretePiece out = sd;
  const double eps = piece_eps(sd);
  for (auto& c : out.columns) {
    const bool keep = !c.chains.empty();
    c = normalize_column(to_sided(c), eps, keep);
  }
  return out;
}

SemiDiscretePiece semidiscretize(const Polygon& normalized, double theta_degrees, double resolution,
                                 GapClosure scope, const std::string& source_id) {
  const Polygon rotated = rotate(normalized, theta_degrees);
  SemiDiscretePiece sd = discretize(rotated, resolution);
  sd = extend_convex_vertices(sd, rotated);
  sd = close_gaps(sd, scope);
  sd = join_tuples(sd);
  for (auto& c : sd.columns) c.chains.clear();
  sd.source_id = source_id;
  sd.rotation = theta_degrees;
  return sd;
}

std::string dump(const SemiDiscretePiece& sd) {
  std::ostringstream os;
  char buf[96];
  for (std::size_t i = 0; i < sd.columns.size(); ++i) {
    os << i << ':';
    for (const auto& t : sd.columns[i].tuples) {
      std::snprintf(buf, sizeof buf, " (%.9g,%.9g,%c)", t.b, t.t, label_char(t.label));
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace seminest
