#include "hullcoreset/convex_mink.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hullcoreset {
namespace {

double global_farthest(const FarthestQuery& fq, std::size_t i) {
  const ConvexChain& c = fq.chain();
  if (c.size() == 1) return 0.0;
  const DirectedLine forward{c[i], Direction::of(c[i], c[c.next(i)])};
  const DirectedLine backward{c[i], forward.dir.reversed()};
  double best = 0.0;
  for (const DirectedLine& line : {forward, backward}) {
    if (const auto hit = fq.farthest_in_halfplane(i, line)) best = std::max(best, hit->distance);
  }
  return best;
}

void require_eps(double eps) {
  if (!std::isfinite(eps) || eps < 0.0) throw std::invalid_argument("eps must be finite and >= 0");
}

}  // namespace

std::optional<CoverCenter> single_point_cover(const FarthestQuery& fq, double eps) {
  for (std::size_t i = 0; i < fq.size(); ++i) {
    const double r = global_farthest(fq, i);
    if (r <= eps) return CoverCenter{i, r};
  }
  return std::nullopt;
}

std::optional<CoverCenter> single_point_cover(const ConvexChain& chain, double eps) {
  return single_point_cover(FarthestQuery(chain, Backend::canonical), eps);
}

CoverCenter best_single_point(const FarthestQuery& fq) {
  CoverCenter best{0, global_farthest(fq, 0)};
  for (std::size_t i = 1; i < fq.size(); ++i) {
    const double r = global_farthest(fq, i);
    if (r < best.radius) best = {i, r};
  }
  return best;
}

FriendArray compute_friends(const CostOracle& oracle, double eps) {
  require_eps(eps);
  const std::size_t n = oracle.size();
  FriendArray out;
  out.eps = eps;
  out.reach.resize(n);
  std::size_t reach = 1;
  for (std::size_t i = 0; i < n; ++i) {
    // The previous friend stays reachable from i because the arc shrinks.
    reach = std::max(reach, i + 1);
    for (std::size_t j = reach + 1; j <= i + n - 1; ++j) {
      if (oracle.cost0(i, j % n) > eps) break;
      reach = j;
    }
    out.reach[i] = reach;
  }
  return out;
}

FriendForest build_friend_forest(const FriendArray& friends) {
  const std::size_t n = friends.size();
  FriendForest forest;
  forest.parent.assign(n, FriendForest::npos);
  forest.depth.assign(n, 1);
  forest.root.resize(n);
  for (std::size_t i = n; i-- > 0;) {
    if (friends.reach[i] < n) {
      const std::size_t p = friends.reach[i];
      forest.parent[i] = p;
      forest.depth[i] = forest.depth[p] + 1;
      forest.root[i] = forest.root[p];
    } else {
      forest.root[i] = i;
    }
  }
  return forest;
}

Solution solve_cx_mink(const CostOracle& oracle, double eps) {
  require_eps(eps);
  const ConvexChain& c = oracle.chain();
  const std::size_t n = c.size();
  const std::uint64_t queries_before = oracle.query_count();

  Solution sol;
  sol.meta.solver = "cx-mink";
  sol.meta.backend = to_string(oracle.backend());
  auto finish = [&](std::vector<std::size_t> chosen, double realized) {
    for (std::size_t v : chosen) sol.indices.push_back(c.source_index(v));
    sol.k = chosen.size();
    sol.eps = realized;
    sol.meta.cost0_queries = oracle.query_count() - queries_before;
    return sol;
  };

  if (const auto cover = single_point_cover(oracle.farthest(), eps)) {
    return finish({cover->index}, cover->radius);
  }
  if (n == 2) return finish({0, 1}, 0.0);

  const FriendArray friends = compute_friends(oracle, eps);
  const FriendForest forest = build_friend_forest(friends);

  // A start i closes a valid greedy sequence when the friend of its root
  // wraps around to i or beyond; i = 0 always qualifies.
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (friends.reach[forest.root[i]] < i + n) continue;
    if (forest.depth[i] < forest.depth[start]) start = i;
  }
  std::vector<std::size_t> chosen;
  for (std::size_t v = start; v != FriendForest::npos; v = forest.parent[v]) chosen.push_back(v);

  double realized = 0.0;
  for (std::size_t t = 0; t < chosen.size(); ++t) {
    realized = std::max(realized, oracle.cost0(chosen[t], chosen[(t + 1) % chosen.size()]));
  }
  return finish(std::move(chosen), realized);
}

Solution solve_cx_mink(const ConvexChain& chain, double eps, Backend backend) {
  if (chain.size() == 1) {
    require_eps(eps);
    Solution sol;
    sol.indices = {chain.source_index(0)};
    sol.k = 1;
    sol.meta.solver = "cx-mink";
    sol.meta.backend = to_string(backend);
    return sol;
  }
  const CostOracle oracle(chain, backend);
  return solve_cx_mink(oracle, eps);
}

}  // namespace hullcoreset
