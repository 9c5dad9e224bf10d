#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>

#include "hullcoreset/farthest_query.hpp"
#include "hullcoreset/geometry.hpp"

namespace hullcoreset {

/// Answers cost0(i, j): the largest distance from a vertex strictly inside
/// the clockwise arc i -> j to the segment p_i p_j.
///
/// The value splits into a slab term (distance to the supporting line,
/// maximized by binary search over the concave arc) and two cone terms near
/// the endpoints, each resolved with one farthest-in-halfplane query.
class CostOracle {
 public:
  /// Throws std::invalid_argument("chain too small") when n < 2.
  CostOracle(std::shared_ptr<const ConvexChain> chain, Backend backend);
  CostOracle(const ConvexChain& chain, Backend backend);

  CostOracle(const CostOracle&) = delete;
  CostOracle& operator=(const CostOracle&) = delete;

  /// Requires i != j (std::invalid_argument) and valid indices
  /// (std::out_of_range). Increments the query counter by one.
  double cost0(std::size_t i, std::size_t j) const;

  std::uint64_t query_count() const { return queries_.load(std::memory_order_relaxed); }
  void reset_query_count() { queries_.store(0, std::memory_order_relaxed); }

  const ConvexChain& chain() const { return fq_.chain(); }
  const FarthestQuery& farthest() const { return fq_; }
  std::size_t size() const { return fq_.size(); }
  Backend backend() const { return fq_.backend(); }

 private:
  double slab_term(std::size_t i, std::size_t j) const;
  double cone_term(std::size_t apex, std::size_t other, std::size_t i, std::size_t j) const;

  FarthestQuery fq_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

/// Linear-scan cost0 with the same contract as CostOracle::cost0.
double brute_cost0(const ConvexChain& chain, std::size_t i, std::size_t j);

}  // namespace hullcoreset
