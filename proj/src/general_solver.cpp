#include "hullcoreset/general_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "hullcoreset/convex_mineps.hpp"
#include "hullcoreset/convex_mink.hpp"
#include "hullcoreset/farthest_query.hpp"

namespace hullcoreset {
namespace {

constexpr std::size_t kUnbounded = static_cast<std::size_t>(-1);

struct DistinctPoints {
  std::vector<Point2> points;
  std::vector<std::size_t> source;
};

DistinctPoints distinct_points(std::span<const Point2> input) {
  if (input.empty()) throw std::invalid_argument("empty point set");
  std::vector<std::size_t> order(input.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lex_less(input[a], input[b]); });
  std::vector<bool> keep(input.size(), true);
  for (std::size_t t = 1; t < order.size(); ++t) {
    if (input[order[t]] == input[order[t - 1]]) keep[order[t]] = false;
  }
  DistinctPoints out;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (!keep[i]) continue;
    out.points.push_back(input[i]);
    out.source.push_back(i);
  }
  return out;
}

void require_eps(double eps) {
  if (!std::isfinite(eps) || eps < 0.0) throw std::invalid_argument("eps must be finite and >= 0");
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

// 0 for directions in [0, pi), 1 for [pi, 2pi).
int half_of(int sx, int sy) { return (sy > 0 || (sy == 0 && sx > 0)) ? 0 : 1; }

int half_of(const Direction& d) {
  int sx = sign(d.to.x - d.from.x);
  int sy = sign(d.to.y - d.from.y);
  for (int t = 0; t < d.quarter_turns; ++t) {
    const int tmp = sx;
    sx = -sy;
    sy = tmp;
  }
  return half_of(sx, sy);
}

// Farthest distance from an apex within closed right-angle cones, for cones
// given by their clockwise-most boundary direction.
class ConeMaxima {
 public:
  ConeMaxima(std::span<const Point2> points, std::size_t apex) : apex_(points[apex]) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i != apex) around_.push_back(points[i]);
    }
    const Point2& a = apex_;
    auto half = [&](const Point2& x) { return half_of(sign(x.x - a.x), sign(x.y - a.y)); };
    std::sort(around_.begin(), around_.end(), [&](const Point2& p, const Point2& q) {
      const int hp = half(p), hq = half(q);
      if (hp != hq) return hp < hq;
      return cross_sign(a, p, a, q) > 0;
    });
    const std::size_t m = around_.size();
    std::vector<double> base(2 * m);
    for (std::size_t t = 0; t < 2 * m; ++t) base[t] = distance(a, around_[t % m]);
    table_.push_back(std::move(base));
    for (std::size_t len = 2; len <= 2 * m; len *= 2) {
      const std::vector<double>& prev = table_.back();
      std::vector<double> level(2 * m - len + 1);
      for (std::size_t t = 0; t < level.size(); ++t) {
        level[t] = std::max(prev[t], prev[t + len / 2]);
      }
      table_.push_back(std::move(level));
    }
  }

  double query(const Direction& sigma) const {
    const std::size_t m = around_.size();
    const Point2& a = apex_;
    const int hs = half_of(sigma);
    auto before_sigma = [&](const Point2& x) {
      const int hx = half_of(sign(x.x - a.x), sign(x.y - a.y));
      if (hx != hs) return hx < hs;
      return cross_sign(sigma, a, x) < 0;
    };
    const std::size_t start = static_cast<std::size_t>(
        std::partition_point(around_.begin(), around_.end(), before_sigma) - around_.begin());

    const Direction normal = sigma.rotated_ccw();
    auto inside = [&](const Point2& x) {
      return cross_sign(sigma, a, x) >= 0 && cross_sign(normal, a, x) <= 0;
    };
    std::size_t lo = 0, hi = m;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo + 1) / 2;
      if (inside(around_[(start + mid - 1) % m])) lo = mid; else hi = mid - 1;
    }
    if (lo == 0) return 0.0;
    return range_max(start, start + lo);
  }

 private:
  double range_max(std::size_t first, std::size_t last) const {
    const std::size_t len = last - first;
    std::size_t level = 0;
    while ((std::size_t{2} << level) <= len) ++level;
    const std::vector<double>& row = table_[level];
    return std::max(row[first], row[last - (std::size_t{1} << level)]);
  }

  Point2 apex_;
  std::vector<Point2> around_;
  std::vector<std::vector<double>> table_;
};

std::vector<double> single_point_radii(std::span<const Point2> points, const ConvexChain& hull) {
  std::vector<double> radius(points.size(), 0.0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    double best = 0.0;
    for (const Point2& v : hull.vertices()) best = std::max(best, squared_distance(points[i], v));
    radius[i] = std::sqrt(best);
  }
  return radius;
}

Solution make_solution(const char* solver, const DistinctPoints& d,
                       const std::vector<std::size_t>& chosen) {
  Solution sol;
  sol.meta.solver = solver;
  sol.meta.backend = "bfs";
  for (std::size_t v : chosen) sol.indices.push_back(d.source[v]);
  sol.k = chosen.size();
  sol.eps = subset_cost(d.points, chosen);
  return sol;
}

std::size_t plus_one_anchor(const ConvexChain& hull) {
  const auto src = hull.source_indices();
  return *std::min_element(src.begin(), src.end());
}

struct BfsScratch {
  explicit BfsScratch(std::size_t n) : parent(n), seen(n, 0), closing(n, 0) {}
  std::vector<std::size_t> parent;
  std::vector<std::uint32_t> seen;
  std::vector<std::uint32_t> closing;
  std::uint32_t stamp = 0;
};

// Length of the shortest cycle through `s` that is shorter than `bound`, or
// 0. On success `cycle` holds the vertices starting at s.
std::size_t shortest_cycle_from(const ThresholdGraph& g,
                                const std::vector<std::vector<std::size_t>>& in,
                                std::size_t s, std::size_t bound, BfsScratch& scratch,
                                std::vector<std::size_t>& cycle) {
  if (bound <= 2) return 0;
  const std::uint32_t stamp = ++scratch.stamp;
  for (std::size_t v : in[s]) scratch.closing[v] = stamp;
  scratch.seen[s] = stamp;
  std::vector<std::size_t> frontier{s}, next;
  for (std::size_t depth = 1; depth + 1 < bound; ++depth) {
    next.clear();
    for (std::size_t u : frontier) {
      for (std::size_t v : g.successors(u)) {
        if (scratch.seen[v] == stamp) continue;
        scratch.seen[v] = stamp;
        scratch.parent[v] = u;
        next.push_back(v);
      }
    }
    if (next.empty()) return 0;
    std::size_t close = kUnbounded;
    for (std::size_t v : next) {
      if (scratch.closing[v] == stamp) close = std::min(close, v);
    }
    if (close != kUnbounded) {
      cycle.clear();
      for (std::size_t v = close; v != s; v = scratch.parent[v]) cycle.push_back(v);
      cycle.push_back(s);
      std::reverse(cycle.begin(), cycle.end());
      return depth + 1;
    }
    frontier.swap(next);
  }
  return 0;
}

std::vector<std::vector<std::size_t>> in_lists(const ThresholdGraph& g) {
  std::vector<std::vector<std::size_t>> in(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v : g.successors(u)) in[v].push_back(u);
  }
  return in;
}

double cycle_weight(const WeightMatrix& w, const std::vector<std::size_t>& cycle) {
  double out = 0.0;
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    out = std::max(out, w(cycle[t], cycle[(t + 1) % cycle.size()]));
  }
  return out;
}

std::size_t bound_from(std::size_t max_length) {
  if (max_length == 0) throw std::invalid_argument("cycle length bound must be >= 1");
  return max_length == kUnbounded ? kUnbounded : max_length + 1;
}

// Smallest index in `values` whose predicate holds; values.size() if none.
template <typename Pred>
std::size_t first_true(const std::vector<double>& values, Pred&& pred) {
  std::size_t lo = 0, hi = values.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (pred(values[mid])) hi = mid; else lo = mid + 1;
  }
  return lo;
}

}  // namespace

std::vector<double> WeightMatrix::distinct_weights() const {
  std::vector<double> out;
  out.reserve(n_ * (n_ - 1));
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (a != b) out.push_back((*this)(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ThresholdGraph::ThresholdGraph(const WeightMatrix& weights, double eps)
    : weights_(&weights), eps_(eps), out_(weights.size()) {
  const std::size_t n = weights.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && weights(a, b) <= eps) out_[a].push_back(b);
    }
  }
}

bool ThresholdGraph::has_edge(std::size_t a, std::size_t b) const {
  return std::binary_search(out_[a].begin(), out_[a].end(), b);
}

WeightMatrix compute_edge_weights(std::span<const Point2> points) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("edge weights need at least two points");
  const auto hull = std::make_shared<const ConvexChain>(convex_hull(points));
  if (hull->size() == 1) throw std::invalid_argument("duplicate points");
  const ExtremeVertexLocator extremes(hull);

  WeightMatrix w(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      if (points[a] == points[b]) throw std::invalid_argument("duplicate points");
      const Point2& top = (*hull)[extremes.leftmost(Direction::of(points[a], points[b]))];
      w(a, b) = std::max(0.0, signed_line_distance(points[a], points[b], top));
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    const ConeMaxima cones(points, v);
    for (std::size_t u = 0; u < n; ++u) {
      if (u == v) continue;
      // v as the first endpoint of (v, u), then as the second of (u, v).
      w(v, u) = std::max(w(v, u), cones.query(Direction::of(points[v], points[u], 1)));
      w(u, v) = std::max(w(u, v), cones.query(Direction::of(points[u], points[v], 0)));
    }
  }
  return w;
}

std::optional<CycleSolution> min_cycle(const ThresholdGraph& graph, std::size_t max_length) {
  const auto in = in_lists(graph);
  BfsScratch scratch(graph.size());
  std::size_t bound = bound_from(max_length);
  std::vector<std::size_t> cycle, best;
  for (std::size_t s = 0; s < graph.size() && bound > 2; ++s) {
    const std::size_t len = shortest_cycle_from(graph, in, s, bound, scratch, cycle);
    if (len == 0) continue;
    bound = len;
    best = cycle;
  }
  if (best.empty()) return std::nullopt;
  return CycleSolution{best, cycle_weight(graph.weights(), best)};
}

std::optional<CycleSolution> min_cycle_through(const ThresholdGraph& graph, std::size_t source,
                                               std::size_t max_length) {
  if (source >= graph.size()) throw std::out_of_range("cycle source out of range");
  const auto in = in_lists(graph);
  BfsScratch scratch(graph.size());
  std::vector<std::size_t> cycle;
  if (shortest_cycle_from(graph, in, source, bound_from(max_length), scratch, cycle) == 0) {
    return std::nullopt;
  }
  return CycleSolution{cycle, cycle_weight(graph.weights(), cycle)};
}

double subset_cost(std::span<const Point2> points, std::span<const std::size_t> subset) {
  if (subset.empty()) throw std::invalid_argument("empty subset");
  std::vector<Point2> chosen;
  chosen.reserve(subset.size());
  for (std::size_t i : subset) chosen.push_back(points[i]);
  const ConvexChain hull = convex_hull(chosen);
  double best = 0.0;
  for (const Point2& p : points) best = std::max(best, dist_point_hull(p, hull));
  return best;
}

Solution solve_mink(std::span<const Point2> points, double eps) {
  require_eps(eps);
  const DistinctPoints d = distinct_points(points);
  const ConvexChain hull = convex_hull(d.points);
  const std::vector<double> radius = single_point_radii(d.points, hull);
  for (std::size_t i = 0; i < radius.size(); ++i) {
    if (radius[i] <= eps) return make_solution("mink", d, {i});
  }
  const WeightMatrix w = compute_edge_weights(d.points);
  const auto cycle = min_cycle(ThresholdGraph(w, eps));
  if (!cycle) throw std::logic_error("threshold graph lost the hull cycle");
  return make_solution("mink", d, cycle->cycle);
}

Solution solve_mineps(std::span<const Point2> points, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  const DistinctPoints d = distinct_points(points);
  const ConvexChain hull = convex_hull(d.points);
  const std::vector<double> radius = single_point_radii(d.points, hull);
  const std::size_t center = static_cast<std::size_t>(
      std::min_element(radius.begin(), radius.end()) - radius.begin());
  if (k == 1 || d.points.size() == 1) return make_solution("mineps", d, {center});

  const WeightMatrix w = compute_edge_weights(d.points);
  const std::vector<double> candidates = w.distinct_weights();
  const std::size_t pick = first_true(candidates, [&](double eps) {
    return min_cycle(ThresholdGraph(w, eps), k).has_value();
  });
  if (pick == candidates.size()) throw std::logic_error("no feasible edge weight");
  const double eps = candidates[pick];
  if (radius[center] < eps) return make_solution("mineps", d, {center});
  return make_solution("mineps", d, min_cycle(ThresholdGraph(w, eps), k)->cycle);
}

Solution approx2_mink(std::span<const Point2> points, double eps) {
  require_eps(eps);
  const DistinctPoints d = distinct_points(points);
  const ConvexChain hull = convex_hull(d.points);
  // Single-point solutions first.
  const std::vector<double> radius = single_point_radii(d.points, hull);
  for (std::size_t i = 0; i < radius.size(); ++i) {
    if (radius[i] <= eps) return make_solution("approx2-mink", d, {i});
  }
  Solution sol = solve_cx_mink(hull, eps);
  for (std::size_t& i : sol.indices) i = d.source[i];
  sol.meta.solver = "approx2-mink";
  return sol;
}

Solution approx2_mineps(std::span<const Point2> points, std::size_t k, std::uint64_t seed) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  const DistinctPoints d = distinct_points(points);
  const ConvexChain hull = convex_hull(d.points);
  if (k == 1) {
    const std::vector<double> radius = single_point_radii(d.points, hull);
    const auto best = std::min_element(radius.begin(), radius.end()) - radius.begin();
    return make_solution("approx2-mineps", d, {static_cast<std::size_t>(best)});
  }
  const std::size_t budget = std::min(2 * k, hull.size());
  Solution sol = solve_cx_mineps(hull, budget, seed);
  for (std::size_t& i : sol.indices) i = d.source[i];
  sol.meta.solver = "approx2-mineps";
  return sol;
}

Solution plus_one_mink(std::span<const Point2> points, double eps) {
  require_eps(eps);
  const DistinctPoints d = distinct_points(points);
  const ConvexChain hull = convex_hull(d.points);
  const std::size_t anchor = plus_one_anchor(hull);
  const std::vector<double> radius = single_point_radii(d.points, hull);
  if (radius[anchor] <= eps) return make_solution("plus1-mink", d, {anchor});
  const WeightMatrix w = compute_edge_weights(d.points);
  const auto cycle = min_cycle_through(ThresholdGraph(w, eps), anchor);
  if (!cycle) throw std::logic_error("threshold graph lost the hull cycle");
  return make_solution("plus1-mink", d, cycle->cycle);
}

Solution plus_one_mineps(std::span<const Point2> points, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  const DistinctPoints d = distinct_points(points);
  const ConvexChain hull = convex_hull(d.points);
  const std::size_t anchor = plus_one_anchor(hull);
  const std::vector<double> radius = single_point_radii(d.points, hull);
  if (d.points.size() == 1) return make_solution("plus1-mineps", d, {anchor});

  const WeightMatrix w = compute_edge_weights(d.points);
  std::vector<double> candidates = w.distinct_weights();
  candidates.push_back(radius[anchor]);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  auto feasible = [&](double eps) {
    return radius[anchor] <= eps ||
           min_cycle_through(ThresholdGraph(w, eps), anchor, k + 1).has_value();
  };
  const std::size_t pick = first_true(candidates, feasible);
  if (pick == candidates.size()) throw std::logic_error("no feasible edge weight");
  const double eps = candidates[pick];
  if (radius[anchor] <= eps) return make_solution("plus1-mineps", d, {anchor});
  return make_solution("plus1-mineps", d,
                       min_cycle_through(ThresholdGraph(w, eps), anchor, k + 1)->cycle);
}

}  // namespace hullcoreset
