#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hullcoreset/cost_oracle.hpp"
#include "hullcoreset/solution.hpp"

namespace hullcoreset {

using Rng = std::mt19937_64;

/// True iff some subset of at most k chain vertices has cost <= eps.
bool decider(const CostOracle& oracle, double eps, std::size_t k);

/// `count` draws, with replacement, of cost0(i, j) over uniformly random
/// ordered pairs i != j. Requires n >= 2.
std::vector<double> sample_critical(const CostOracle& oracle, Rng& rng, std::size_t count);

/// All critical values cost0(i, j), i != j, lying in [alpha, beta], sorted
/// ascending with multiplicity. Throws std::invalid_argument if alpha > beta.
std::vector<double> extract(const CostOracle& oracle, double alpha, double beta);

/// Smallest eps such that at most k chain vertices achieve cost eps, with a
/// realizing subset. Requires k >= 1. Sampling is seeded with `seed`.
Solution solve_cx_mineps(const CostOracle& oracle, std::size_t k, std::uint64_t seed);
Solution solve_cx_mineps(const ConvexChain& chain, std::size_t k, std::uint64_t seed,
                         Backend backend = Backend::canonical);

}  // namespace hullcoreset
