#include "hullcoreset/cost_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace hullcoreset {
namespace {

const ConvexChain& require_pair_chain(const std::shared_ptr<const ConvexChain>& chain) {
  if (!chain) throw std::invalid_argument("null chain");
  if (chain->size() < 2) throw std::invalid_argument("chain too small");
  return *chain;
}

void check_pair(const ConvexChain& chain, std::size_t i, std::size_t j) {
  if (i >= chain.size() || j >= chain.size()) throw std::out_of_range("cost0 index out of range");
  if (i == j) throw std::invalid_argument("cost0 requires i != j");
}

}  // namespace

CostOracle::CostOracle(std::shared_ptr<const ConvexChain> chain, Backend backend)
    : fq_((require_pair_chain(chain), std::move(chain)), backend) {}

CostOracle::CostOracle(const ConvexChain& chain, Backend backend)
    : CostOracle(std::make_shared<const ConvexChain>(chain), backend) {}

double CostOracle::slab_term(std::size_t i, std::size_t j) const {
  const ConvexChain& c = chain();
  const Direction chord = Direction::of(c[i], c[j]);
  // Offsets 1 .. span-1 are interior; the distance to the chord line is
  // concave along them. Find the first offset whose successor is not further
  // left, which keeps plateaus at the smaller position.
  const std::size_t span = c.steps(i, j);
  std::size_t lo = 1, hi = span - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const std::size_t v = c.advance(i, mid);
    if (cross_sign(chord, c[v], c[c.next(v)]) <= 0) hi = mid; else lo = mid + 1;
  }
  return std::max(0.0, signed_line_distance(c[i], c[j], c[c.advance(i, lo)]));
}

double CostOracle::cone_term(std::size_t apex, std::size_t other, std::size_t i,
                             std::size_t j) const {
  const ConvexChain& c = chain();
  // Vertices whose projection onto apex->other falls before the apex.
  const DirectedLine behind = DirectedLine::orthogonal(c[apex], c[apex], c[other]);
  const auto hit = fq_.farthest_in_halfplane(apex, behind);
  if (!hit || orient(c[i], c[j], c[hit->index]) != Orientation::left) return 0.0;
  return hit->distance;
}

double CostOracle::cost0(std::size_t i, std::size_t j) const {
  const ConvexChain& c = chain();
  check_pair(c, i, j);
  queries_.fetch_add(1, std::memory_order_relaxed);
  if (c.next(i) == j) return 0.0;
  const double slab = slab_term(i, j);
  const double cone_i = cone_term(i, j, i, j);
  const double cone_j = cone_term(j, i, i, j);
  return std::max({slab, cone_i, cone_j});
}

double brute_cost0(const ConvexChain& chain, std::size_t i, std::size_t j) {
  if (chain.size() < 2) throw std::invalid_argument("chain too small");
  check_pair(chain, i, j);
  const Segment chord{chain[i], chain[j]};
  double best = 0.0;
  for (std::size_t v = chain.next(i); v != j; v = chain.next(v)) {
    best = std::max(best, dist_point_segment(chain[v], chord));
  }
  return best;
}

}  // namespace hullcoreset
