#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hullcoreset/geometry.hpp"
#include "hullcoreset/solution.hpp"

namespace hullcoreset {

/// w(a, b) for all ordered pairs: the largest distance to segment ab among
/// the points in the closed halfplane left of the directed line a -> b.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(std::size_t n) : n_(n), w_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t a, std::size_t b) const { return w_[a * n_ + b]; }
  double& operator()(std::size_t a, std::size_t b) { return w_[a * n_ + b]; }

  /// Off-diagonal weights, sorted ascending without duplicates.
  std::vector<double> distinct_weights() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> w_;
};

/// Directed graph keeping the edges of a WeightMatrix with weight <= eps.
/// Holds a reference to the matrix, which must outlive it.
class ThresholdGraph {
 public:
  ThresholdGraph(const WeightMatrix& weights, double eps);

  const WeightMatrix& weights() const { return *weights_; }
  std::size_t size() const { return out_.size(); }
  double eps() const { return eps_; }
  const std::vector<std::size_t>& successors(std::size_t v) const { return out_[v]; }
  bool has_edge(std::size_t a, std::size_t b) const;

 private:
  const WeightMatrix* weights_;
  double eps_;
  std::vector<std::vector<std::size_t>> out_;  // sorted
};

struct CycleSolution {
  std::vector<std::size_t> cycle;  // vertex order along the cycle
  double weight = 0.0;             // largest edge weight on the cycle
};

/// Requires at least two distinct points; throws std::invalid_argument
/// otherwise or on duplicate points.
WeightMatrix compute_edge_weights(std::span<const Point2> points);

/// Shortest directed cycle of length >= 2, by breadth-first search from every
/// source. Ties go to the smallest (source, closing vertex) pair. Cycles
/// longer than `max_length` are ignored.
std::optional<CycleSolution> min_cycle(const ThresholdGraph& graph,
                                       std::size_t max_length = static_cast<std::size_t>(-1));

/// Shortest cycle through `source`, with the same conventions as min_cycle.
std::optional<CycleSolution> min_cycle_through(const ThresholdGraph& graph, std::size_t source,
                                               std::size_t max_length = static_cast<std::size_t>(-1));

/// max over p in points of dist(p, CH(subset)).
double subset_cost(std::span<const Point2> points, std::span<const std::size_t> subset);

/// Exact solvers for arbitrary point sets. Duplicate points are merged (the
/// first occurrence is reported).
Solution solve_mink(std::span<const Point2> points, double eps);
Solution solve_mineps(std::span<const Point2> points, std::size_t k);

/// Convex-position solvers on the hull vertices, after a single-point check.
Solution approx2_mink(std::span<const Point2> points, double eps);
Solution approx2_mineps(std::span<const Point2> points, std::size_t k, std::uint64_t seed);

/// Solutions forced through the hull vertex of smallest input index.
Solution plus_one_mink(std::span<const Point2> points, double eps);
Solution plus_one_mineps(std::span<const Point2> points, std::size_t k);

}  // namespace hullcoreset
