#include "hullcoreset/oracles.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hullcoreset/cost_oracle.hpp"

namespace hullcoreset::oracle {
namespace {

void require_budget(std::span<const Point2> P, const BruteConfig& config) {
  if (config.max_n < 3) throw std::invalid_argument("BruteConfig.max_n must be >= 3");
  if (P.empty()) throw std::invalid_argument("empty point set");
  if (P.size() > config.max_n) throw std::invalid_argument("point set exceeds brute-force budget");
}

// Visits every size-s index combination of [0, n) in lexicographic order
// until `visit` returns true.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t s, Visit&& visit) {
  std::vector<std::size_t> idx(s);
  for (std::size_t t = 0; t < s; ++t) idx[t] = t;
  while (true) {
    if (visit(idx)) return true;
    std::size_t t = s;
    while (t > 0 && idx[t - 1] == n - s + t - 1) --t;
    if (t == 0) return false;
    ++idx[t - 1];
    for (std::size_t u = t; u < s; ++u) idx[u] = idx[u - 1] + 1;
  }
}

double subset_cost(std::span<const Point2> P, const std::vector<std::size_t>& idx) {
  std::vector<Point2> q;
  q.reserve(idx.size());
  for (std::size_t i : idx) q.push_back(P[i]);
  return brute_cost(q, P);
}

}  // namespace

double brute_cost(std::span<const Point2> Q, std::span<const Point2> P) {
  if (Q.empty()) throw std::invalid_argument("empty subset");
  const ConvexChain hull = convex_hull(Q);
  double best = 0.0;
  for (const Point2& p : P) best = std::max(best, dist_point_hull(p, hull));
  return best;
}

BruteResult brute_mink(std::span<const Point2> P, double eps, const BruteConfig& config) {
  require_budget(P, config);
  BruteResult out;
  for (std::size_t s = 1; s <= P.size(); ++s) {
    const bool found = for_each_combination(P.size(), s, [&](const std::vector<std::size_t>& idx) {
      const double c = subset_cost(P, idx);
      if (c > eps) return false;
      out = {s, c, idx};
      return true;
    });
    if (found) return out;
  }
  throw std::invalid_argument("eps below zero admits no subset");
}

BruteResult brute_mineps(std::span<const Point2> P, std::size_t k, const BruteConfig& config) {
  require_budget(P, config);
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  BruteResult out;
  out.eps = std::numeric_limits<double>::infinity();
  for (std::size_t s = 1; s <= std::min(k, P.size()); ++s) {
    for_each_combination(P.size(), s, [&](const std::vector<std::size_t>& idx) {
      const double c = subset_cost(P, idx);
      if (c < out.eps) out = {s, c, idx};
      return false;
    });
  }
  return out;
}

std::vector<double> brute_cost_profile(std::span<const Point2> P, const BruteConfig& config) {
  require_budget(P, config);
  std::vector<double> best(P.size() + 1, std::numeric_limits<double>::infinity());
  for (std::size_t s = 1; s <= P.size(); ++s) {
    for_each_combination(P.size(), s, [&](const std::vector<std::size_t>& idx) {
      best[s] = std::min(best[s], subset_cost(P, idx));
      return false;
    });
  }
  return best;
}

double brute_edge_weight(std::span<const Point2> P, std::size_t a, std::size_t b) {
  if (a >= P.size() || b >= P.size()) throw std::out_of_range("edge endpoint out of range");
  if (P[a] == P[b]) throw std::invalid_argument("edge endpoints coincide");
  const Segment ab{P[a], P[b]};
  double best = 0.0;
  for (const Point2& x : P) {
    if (orient(P[a], P[b], x) == Orientation::right) continue;
    best = std::max(best, dist_point_segment(x, ab));
  }
  return best;
}

std::vector<double> brute_critical_values(const ConvexChain& chain) {
  std::vector<double> out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = 0; j < chain.size(); ++j) {
      if (i != j) out.push_back(brute_cost0(chain, i, j));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FriendArray brute_friends(const ConvexChain& chain, double eps) {
  const std::size_t n = chain.size();
  FriendArray out;
  out.eps = eps;
  out.reach.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t reach = i + 1;
    for (std::size_t t = 2; t < n; ++t) {
      if (brute_cost0(chain, i, (i + t) % n) <= eps) reach = i + t;
    }
    out.reach[i] = reach;
  }
  return out;
}

}  // namespace hullcoreset::oracle
