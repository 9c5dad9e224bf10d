#include "hullcoreset/convex_mineps.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hullcoreset/convex_mink.hpp"

namespace hullcoreset {
namespace {

// Index of the first value for which `pred` holds, assuming pred is monotone
// false -> true over `values`; values.size() when it never holds.
template <typename Pred>
std::size_t first_true(const std::vector<double>& values, Pred&& pred) {
  std::size_t lo = 0, hi = values.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (pred(values[mid])) hi = mid; else lo = mid + 1;
  }
  return lo;
}

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

bool decider(const CostOracle& oracle, double eps, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  return solve_cx_mink(oracle, eps).k <= k;
}

std::vector<double> sample_critical(const CostOracle& oracle, Rng& rng, std::size_t count) {
  const std::size_t n = oracle.size();
  std::uniform_int_distribution<std::size_t> pick_i(0, n - 1);
  std::uniform_int_distribution<std::size_t> pick_offset(1, n - 1);
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t i = pick_i(rng);
    const std::size_t j = (i + pick_offset(rng)) % n;
    out.push_back(oracle.cost0(i, j));
  }
  return out;
}

std::vector<double> extract(const CostOracle& oracle, double alpha, double beta) {
  if (alpha > beta) throw std::invalid_argument("extract requires alpha <= beta");
  const std::size_t n = oracle.size();
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) {
    // cost0(i, i + t) is nondecreasing in t.
    std::size_t lo = 1, hi = n;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (oracle.cost0(i, (i + mid) % n) >= alpha) hi = mid; else lo = mid + 1;
    }
    for (std::size_t t = lo; t < n; ++t) {
      const double v = oracle.cost0(i, (i + t) % n);
      if (v > beta) break;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Solution solve_cx_mineps(const CostOracle& oracle, std::size_t k, std::uint64_t seed) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  const ConvexChain& c = oracle.chain();
  const std::size_t n = c.size();
  const std::uint64_t queries_before = oracle.query_count();

  Solution sol;
  SolutionMeta meta;
  meta.solver = "cx-mineps";
  meta.backend = to_string(oracle.backend());
  meta.seed = seed;

  auto run_decider = [&](double eps) {
    ++meta.decider_calls;
    return decider(oracle, eps, k);
  };
  auto finish = [&](double eps) {
    sol = solve_cx_mink(oracle, eps);
    sol.eps = eps;
    sol.meta = meta;
    sol.meta.cost0_queries = oracle.query_count() - queries_before;
    return sol;
  };

  if (k >= n) return finish(0.0);
  if (k == 1) {
    // Singletons are not pairs, so their costs lie outside the critical set.
    const CoverCenter best = best_single_point(oracle.farthest());
    sol.indices = {c.source_index(best.index)};
    sol.k = 1;
    sol.eps = best.radius;
    sol.meta = meta;
    sol.meta.cost0_queries = oracle.query_count() - queries_before;
    return sol;
  }

  Rng rng(seed);
  std::vector<double> samples = sample_critical(oracle, rng, 4 * n);
  meta.sample_size = samples.size();
  sort_unique(samples);

  const std::size_t split = first_true(samples, run_decider);
  const double alpha = split == 0 ? 0.0 : samples[split - 1];
  double beta = 0.0;
  if (split < samples.size()) {
    beta = samples[split];
  } else {
    for (std::size_t i = 0; i < n; ++i) beta = std::max(beta, oracle.cost0(i, c.prev(i)));
  }

  std::vector<double> window = extract(oracle, alpha, beta);
  meta.extract_size = window.size();
  sort_unique(window);
  const std::size_t best = first_true(window, run_decider);
  if (best == window.size()) throw std::logic_error("no feasible critical value in window");
  return finish(window[best]);
}

Solution solve_cx_mineps(const ConvexChain& chain, std::size_t k, std::uint64_t seed,
                         Backend backend) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (chain.size() == 1) {
    Solution sol;
    sol.indices = {chain.source_index(0)};
    sol.k = 1;
    sol.meta.solver = "cx-mineps";
    sol.meta.backend = to_string(backend);
    sol.meta.seed = seed;
    return sol;
  }
  const CostOracle oracle(chain, backend);
  return solve_cx_mineps(oracle, k, seed);
}

}  // namespace hullcoreset
