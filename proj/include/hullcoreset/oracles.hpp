#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hullcoreset/convex_mink.hpp"
#include "hullcoreset/geometry.hpp"

namespace hullcoreset::oracle {

struct BruteConfig {
  std::size_t max_n = 12;
};

struct BruteResult {
  std::size_t k = 0;
  double eps = 0.0;
  std::vector<std::size_t> subset;  // indices into P, ascending
};

/// max over p in P of dist(p, CH(Q)). Throws std::invalid_argument on empty Q.
double brute_cost(std::span<const Point2> Q, std::span<const Point2> P);

/// Smallest subset (cardinality ascending, then lexicographic) with cost <= eps.
BruteResult brute_mink(std::span<const Point2> P, double eps, const BruteConfig& config = {});

/// Cheapest subset of size <= k (ties: fewer points, then lexicographic).
BruteResult brute_mineps(std::span<const Point2> P, std::size_t k, const BruteConfig& config = {});

/// best[s] = cheapest cost over subsets of exactly s points, for s = 1..|P|
/// (best[0] is unused). One enumeration serves every k.
std::vector<double> brute_cost_profile(std::span<const Point2> P, const BruteConfig& config = {});

/// w(a, b) by scanning every point in the closed left halfplane of a -> b.
double brute_edge_weight(std::span<const Point2> P, std::size_t a, std::size_t b);

/// All cost0(i, j), i != j, of a chain by linear scans, sorted ascending.
std::vector<double> brute_critical_values(const ConvexChain& chain);

/// Unrolled eps-friends by scanning every clockwise target.
FriendArray brute_friends(const ConvexChain& chain, double eps);

}  // namespace hullcoreset::oracle
