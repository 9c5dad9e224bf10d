#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hullcoreset/cost_oracle.hpp"
#include "hullcoreset/farthest_query.hpp"
#include "hullcoreset/solution.hpp"

namespace hullcoreset {

/// Vertex whose farthest chain vertex lies within `radius`.
struct CoverCenter {
  std::size_t index;
  double radius;
};

/// eps-friends in unrolled form: reach[i] lies in [i + 1, i + n - 1] and
/// names the farthest clockwise position j with cost0(i, j mod n) <= eps.
struct FriendArray {
  std::vector<std::size_t> reach;
  double eps = 0.0;

  std::size_t size() const { return reach.size(); }
  std::size_t friend_of(std::size_t i) const { return reach[i] % reach.size(); }
};

/// Forest with an edge i -> friend(i) whenever the friend does not wrap past
/// the end of the chain.
struct FriendForest {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::vector<std::size_t> parent;  // npos at sinks
  std::vector<std::size_t> depth;   // sinks have depth 1
  std::vector<std::size_t> root;
};

/// Smallest-index vertex whose farthest chain vertex is within eps, checked
/// with two opposite halfplane queries per vertex.
std::optional<CoverCenter> single_point_cover(const FarthestQuery& fq, double eps);
std::optional<CoverCenter> single_point_cover(const ConvexChain& chain, double eps);

/// Vertex minimizing the distance to its farthest chain vertex (smallest
/// index on ties).
CoverCenter best_single_point(const FarthestQuery& fq);

/// Two-pointer sweep; issues at most 3n cost0 queries. Requires n >= 2 and
/// eps >= 0.
FriendArray compute_friends(const CostOracle& oracle, double eps);

FriendForest build_friend_forest(const FriendArray& friends);

/// Minimum-cardinality subset of the chain with Hausdorff cost <= eps.
/// Throws std::invalid_argument for negative or non-finite eps.
Solution solve_cx_mink(const CostOracle& oracle, double eps);
Solution solve_cx_mink(const ConvexChain& chain, double eps, Backend backend = Backend::canonical);

}  // namespace hullcoreset
