#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hullcoreset/convex_mineps.hpp"
#include "hullcoreset/oracles.hpp"
#include "support.hpp"

using namespace hullcoreset;
using testing_support::random_convex_chain;
using testing_support::rel_close;
using testing_support::square_chain;

namespace {

std::vector<Point2> vertices_of(const ConvexChain& c) {
  return {c.vertices().begin(), c.vertices().end()};
}

}  // namespace

TEST(Decider, SquareExamples) {
  const CostOracle o(square_chain(), Backend::canonical);
  EXPECT_TRUE(decider(o, 0.75, 2));
  EXPECT_FALSE(decider(o, 0.7, 2));
  EXPECT_TRUE(decider(o, 0.0, 4));
}

TEST(Decider, MonotoneOverSortedCriticalValues) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const ConvexChain chain = random_convex_chain(rng, 4 + trial % 9);
    const CostOracle o(chain, Backend::canonical);
    auto values = oracle::brute_critical_values(chain);
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t k = 1; k <= chain.size(); ++k) {
      bool seen_true = false;
      for (double v : values) {
        const bool d = decider(o, v * (1 + 1e-12), k);
        ASSERT_FALSE(seen_true && !d);
        seen_true = seen_true || d;
      }
    }
  }
}

TEST(SampleCritical, SquareValuesBelongToCriticalSet) {
  const CostOracle o(square_chain(), Backend::canonical);
  Rng rng(7);
  const auto sample = sample_critical(o, rng, 12);
  ASSERT_EQ(sample.size(), 12u);
  const auto all = oracle::brute_critical_values(square_chain());
  ASSERT_EQ(all.size(), 12u);
  for (double v : sample) {
    EXPECT_TRUE(std::any_of(all.begin(), all.end(), [&](double e) { return rel_close(e, v); }));
  }
}

TEST(SampleCritical, EmptyAndTwoPoint) {
  const CostOracle o(square_chain(), Backend::canonical);
  Rng rng(1);
  EXPECT_TRUE(sample_critical(o, rng, 0).empty());
  const CostOracle two(ConvexChain({{0, 0}, {1, 2}}), Backend::canonical);
  for (double v : sample_critical(two, rng, 20)) EXPECT_EQ(v, 0.0);
}

TEST(SampleCritical, SameSeedSameSample) {
  std::mt19937_64 gen(9);
  const ConvexChain chain = random_convex_chain(gen, 40);
  const CostOracle o(chain, Backend::canonical);
  Rng a(3), b(3);
  EXPECT_EQ(sample_critical(o, a, 50), sample_critical(o, b, 50));
}

TEST(Extract, SquareMiddleBand) {
  const CostOracle o(square_chain(), Backend::canonical);
  const auto x = extract(o, 0.5, 0.9);
  ASSERT_EQ(x.size(), 4u);
  for (double v : x) EXPECT_NEAR(v, 1 / std::sqrt(2.0), 1e-12);
}

TEST(Extract, FullRange) {
  const CostOracle o(square_chain(), Backend::canonical);
  const auto x = extract(o, -1.0, INFINITY);
  EXPECT_EQ(x.size(), 12u);
  EXPECT_TRUE(std::is_sorted(x.begin(), x.end()));
}

TEST(Extract, InvertedIntervalThrows) {
  const CostOracle o(square_chain(), Backend::canonical);
  EXPECT_THROW(extract(o, 0.71, 0.70), std::invalid_argument);
}

TEST(Extract, MatchesBruteEnumeration) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const ConvexChain chain = random_convex_chain(rng, 3 + trial % 30);
    const CostOracle o(chain, Backend::canonical);
    const auto all = oracle::brute_critical_values(chain);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    double a = all[pick(rng)], b = all[pick(rng)];
    if (a > b) std::swap(a, b);
    const auto got = extract(o, a, b);
    // Endpoints come from the brute route, so compare a band strictly inside.
    std::vector<double> inner_got, inner_ref;
    for (double v : got) if (v > a * (1 + 1e-9) && v < b * (1 - 1e-9)) inner_got.push_back(v);
    for (double v : all) if (v > a * (1 + 1e-9) && v < b * (1 - 1e-9)) inner_ref.push_back(v);
    ASSERT_EQ(inner_got.size(), inner_ref.size());
    for (std::size_t t = 0; t < inner_got.size(); ++t) ASSERT_TRUE(rel_close(inner_got[t], inner_ref[t]));
  }
}

TEST(SolveCxMineps, SquareExamples) {
  const ConvexChain sq = square_chain();
  EXPECT_NEAR(solve_cx_mineps(sq, 2, 1).eps, 1 / std::sqrt(2.0), 1e-12);
  EXPECT_EQ(solve_cx_mineps(sq, 4, 1).eps, 0.0);
  const Solution one = solve_cx_mineps(sq, 1, 1);
  EXPECT_NEAR(one.eps, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(one.k, 1u);
}

TEST(SolveCxMineps, RecordsSeedAndCounters) {
  std::mt19937_64 gen(4);
  const ConvexChain chain = random_convex_chain(gen, 50);
  const Solution s = solve_cx_mineps(chain, 5, 99);
  ASSERT_TRUE(s.meta.seed);
  EXPECT_EQ(*s.meta.seed, 99u);
  EXPECT_EQ(s.meta.sample_size, 200u);
  EXPECT_GT(s.meta.decider_calls, 0u);
  EXPECT_GT(s.meta.cost0_queries, 0u);
  EXPECT_LE(s.k, 5u);
}

TEST(SolveCxMineps, SandwichedByDecider) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const ConvexChain chain = random_convex_chain(rng, 4 + trial % 20);
    const CostOracle o(chain, Backend::canonical);
    const std::size_t k = 2 + trial % (chain.size() - 2);
    const Solution s = solve_cx_mineps(o, k, trial);
    EXPECT_TRUE(decider(o, s.eps, k));
    auto all = extract(o, 0.0, INFINITY);
    const auto below = std::lower_bound(all.begin(), all.end(), s.eps);
    if (below != all.begin()) EXPECT_FALSE(decider(o, *std::prev(below), k));
  }
}

TEST(SolveCxMineps, MatchesBruteForEveryK) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const ConvexChain chain = random_convex_chain(rng, 3 + trial % 10);
    const auto pts = vertices_of(chain);
    const auto profile = oracle::brute_cost_profile(pts);
    for (std::size_t k = 1; k <= chain.size(); ++k) {
      const Solution s = solve_cx_mineps(chain, k, 1000 + trial);
      double best = INFINITY;
      for (std::size_t j = 1; j <= k; ++j) best = std::min(best, profile[j]);
      ASSERT_TRUE(rel_close(s.eps, best) || s.eps == best) << trial << " k=" << k;
      ASSERT_LE(s.k, k);
    }
  }
}
