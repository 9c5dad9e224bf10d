#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hullcoreset/general_solver.hpp"
#include "hullcoreset/oracles.hpp"
#include "support.hpp"

using namespace hullcoreset;
using testing_support::random_general_points;
using testing_support::rel_close;
using testing_support::square_center_points;
using testing_support::square_points;

namespace {

std::size_t index_of(const std::vector<Point2>& pts, Point2 p) {
  return static_cast<std::size_t>(std::find(pts.begin(), pts.end(), p) - pts.begin());
}

std::vector<Point2> chosen_points(std::span<const Point2> pts, const Solution& s) {
  std::vector<Point2> q;
  for (std::size_t i : s.indices) q.push_back(pts[i]);
  return q;
}

}  // namespace

TEST(EdgeWeights, SquareCenterDiagonal) {
  const auto pts = square_center_points();
  const WeightMatrix w = compute_edge_weights(pts);
  const std::size_t a = index_of(pts, {0, 0}), b = index_of(pts, {1, 1});
  EXPECT_NEAR(w(a, b), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(oracle::brute_edge_weight(pts, a, b), 1 / std::sqrt(2.0), 1e-12);
}

TEST(EdgeWeights, SquareBoundaryEdge) {
  const auto pts = square_points();
  const WeightMatrix w = compute_edge_weights(pts);
  const std::size_t a = index_of(pts, {0, 0}), b = index_of(pts, {0, 1});
  EXPECT_EQ(w(a, b), 0.0);
}

TEST(EdgeWeights, CollinearTriple) {
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {2, 0}};
  const WeightMatrix w = compute_edge_weights(pts);
  EXPECT_EQ(w(0, 2), 0.0);
  EXPECT_EQ(w(2, 0), 0.0);
  // Closed halfplane: the far endpoint counts, measured to the segment.
  EXPECT_EQ(w(0, 1), 1.0);
}

TEST(EdgeWeights, RejectsBadInput) {
  EXPECT_THROW(compute_edge_weights(std::vector<Point2>{{0, 0}}), std::invalid_argument);
  EXPECT_THROW(compute_edge_weights(std::vector<Point2>{{0, 0}, {1, 1}, {0, 0}}), std::invalid_argument);
}

TEST(EdgeWeights, MatchesBruteScan) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto pts = random_general_points(rng, 2 + trial % 40);
    const WeightMatrix w = compute_edge_weights(pts);
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = 0; b < pts.size(); ++b) {
        if (a == b) continue;
        const double ref = oracle::brute_edge_weight(pts, a, b);
        ASSERT_TRUE(w(a, b) == ref || rel_close(w(a, b), ref)) << trial << " " << a << " " << b;
      }
    }
  }
}

TEST(EdgeWeights, LargeInstanceSpotCheck) {
  std::mt19937_64 rng(2);
  const auto pts = random_general_points(rng, 256);
  const WeightMatrix w = compute_edge_weights(pts);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    ASSERT_TRUE(rel_close(w(a, b), oracle::brute_edge_weight(pts, a, b)));
  }
}

TEST(ThresholdGraph, EdgesGrowWithEps) {
  std::mt19937_64 rng(3);
  const auto pts = random_general_points(rng, 20);
  const WeightMatrix w = compute_edge_weights(pts);
  const auto weights = w.distinct_weights();
  for (std::size_t t = 0; t + 1 < weights.size(); t += 7) {
    const ThresholdGraph lo(w, weights[t]), hi(w, weights[t + 1]);
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b : lo.successors(a)) EXPECT_TRUE(hi.has_edge(a, b));
    }
  }
}

TEST(MinCycle, SquareCenterDiagonal) {
  const auto pts = square_center_points();
  const WeightMatrix w = compute_edge_weights(pts);
  const auto c = min_cycle(ThresholdGraph(w, 0.75));
  ASSERT_TRUE(c);
  ASSERT_EQ(c->cycle.size(), 2u);
  std::vector<Point2> got{pts[c->cycle[0]], pts[c->cycle[1]]};
  std::sort(got.begin(), got.end(), lex_less);
  EXPECT_EQ(got, (std::vector<Point2>{{0, 0}, {1, 1}}));
  EXPECT_NEAR(c->weight, 1 / std::sqrt(2.0), 1e-12);
}

TEST(MinCycle, NoEdges) {
  const auto pts = square_center_points();
  const WeightMatrix w = compute_edge_weights(pts);
  EXPECT_FALSE(min_cycle(ThresholdGraph(w, -1.0)));
}

TEST(MinCycle, TwoVertices) {
  const std::vector<Point2> pts{{0, 0}, {1, 0}};
  const WeightMatrix w = compute_edge_weights(pts);
  const auto c = min_cycle(ThresholdGraph(w, 0.0));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->cycle, (std::vector<std::size_t>{0, 1}));
}

TEST(MinCycle, LengthBound) {
  const auto pts = square_points();
  const WeightMatrix w = compute_edge_weights(pts);
  const ThresholdGraph g(w, 0.0);
  EXPECT_FALSE(min_cycle(g, 3));
  const auto c = min_cycle(g, 4);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->cycle.size(), 4u);
  EXPECT_FALSE(min_cycle_through(g, 2, 3));
  ASSERT_TRUE(min_cycle_through(g, 2));
  EXPECT_EQ(min_cycle_through(g, 2)->cycle.front(), 2u);
}

TEST(MinCycle, WeightBoundsCost) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pts = random_general_points(rng, 3 + trial % 30);
    const WeightMatrix w = compute_edge_weights(pts);
    const auto weights = w.distinct_weights();
    const double eps = weights[std::uniform_int_distribution<std::size_t>(0, weights.size() - 1)(rng)];
    const auto c = min_cycle(ThresholdGraph(w, eps));
    if (!c) continue;
    EXPECT_LE(c->weight, eps);
    EXPECT_LE(oracle::brute_cost(chosen_points(pts, {c->cycle, 0, 0, {}}), pts), c->weight + 1e-9);
  }
}

TEST(SubsetCost, SquareDiagonal) {
  const auto pts = square_points();
  const std::vector<std::size_t> diag{0, 2};
  EXPECT_NEAR(subset_cost(pts, diag), 1 / std::sqrt(2.0), 1e-12);
}

TEST(SolveMink, SquareCenterExamples) {
  const auto pts = square_center_points();
  // The center alone is within 1/sqrt(2) of every corner.
  EXPECT_EQ(solve_mink(pts, 0.75).k, oracle::brute_mink(pts, 0.75).k);
  EXPECT_EQ(solve_mink(pts, 0.75).k, 1u);
  EXPECT_EQ(solve_mink(pts, 0.5).k, oracle::brute_mink(pts, 0.5).k);
  EXPECT_EQ(solve_mink(pts, 0.5).k, 4u);
  EXPECT_EQ(solve_mink(pts, 1.5).k, 1u);
  EXPECT_EQ(solve_mink(square_points(), 0.75).k, 2u);
}

TEST(SolveMink, DuplicatesReportFirstOccurrence) {
  const std::vector<Point2> pts{{0, 0}, {0, 0}, {0, 1}, {1, 1}, {1, 0}, {1, 1}};
  const Solution s = solve_mink(pts, 0.0);
  std::vector<std::size_t> idx = s.indices;
  std::sort(idx.begin(), idx.end());
  EXPECT_EQ(idx, (std::vector<std::size_t>{0, 2, 3, 4}));
}

TEST(SolveMineps, SquareCenterExamples) {
  const auto pts = square_center_points();
  EXPECT_NEAR(solve_mineps(pts, 2).eps, 1 / std::sqrt(2.0), 1e-12);
  EXPECT_EQ(solve_mineps(pts, 5).eps, 0.0);
  EXPECT_EQ(solve_mineps(pts, 4).eps, 0.0);
  EXPECT_THROW(solve_mineps(pts, 0), std::invalid_argument);
}

TEST(SolveGeneral, MatchesBrute) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto pts = random_general_points(rng, 3 + trial % 9);
    const auto profile = oracle::brute_cost_profile(pts);
    const WeightMatrix w = compute_edge_weights(pts);
    const auto weights = w.distinct_weights();
    for (int t = 0; t < 3; ++t) {
      const double e = weights[std::uniform_int_distribution<std::size_t>(0, weights.size() - 1)(rng)];
      for (double eps : {testing_support::just_below(e), testing_support::just_above(e)}) {
        const Solution s = solve_mink(pts, eps);
        ASSERT_EQ(s.k, oracle::brute_mink(pts, eps).k) << trial;
        ASSERT_LE(s.eps, eps);
      }
    }
    double best = INFINITY;
    for (std::size_t k = 1; k <= pts.size(); ++k) {
      best = std::min(best, profile[k]);
      const Solution s = solve_mineps(pts, k);
      ASSERT_TRUE(s.eps == best || rel_close(s.eps, best)) << trial << " k=" << k;
      ASSERT_LE(s.k, k);
    }
  }
}

TEST(Approx2, SquareCenter) {
  const auto pts = square_center_points();
  const Solution s = approx2_mink(pts, 0.75);
  EXPECT_LE(s.k, 4u);
  EXPECT_LE(oracle::brute_cost(chosen_points(pts, s), pts), 0.75);
  // No single point covers at 0.5, so only corners are used.
  const Solution c = approx2_mink(pts, 0.5);
  EXPECT_EQ(c.k, 4u);
  for (std::size_t i : c.indices) EXPECT_LT(i, 4u);
  const Solution m = approx2_mineps(pts, 2, 1);
  EXPECT_LE(m.k, 4u);
  EXPECT_LE(m.eps, 1 / std::sqrt(2.0) + 1e-12);
}

TEST(Approx2, SingleCenterBeatsTwoHullVertices) {
  // Equilateral triangle around its centroid: two corners leave the third
  // farther away than the centroid does.
  const double r3 = std::sqrt(3.0);
  const std::vector<Point2> pts{{0, 0}, {1, r3}, {2, 0}, {1, r3 / 3}};
  const double radius = 2 / r3;
  const Solution s = approx2_mink(pts, radius * (1 + 1e-9));
  EXPECT_EQ(s.k, 1u);
  EXPECT_EQ(s.indices, (std::vector<std::size_t>{3}));
  EXPECT_NEAR(approx2_mineps(pts, 1, 1).eps, radius, 1e-12);
}

TEST(Approx2, ConvexInputMatchesExactSize) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const ConvexChain chain = testing_support::random_convex_chain(rng, 5 + trial % 8);
    const std::vector<Point2> pts(chain.vertices().begin(), chain.vertices().end());
    EXPECT_EQ(approx2_mink(pts, 0.05).k, solve_mink(pts, 0.05).k);
  }
}

TEST(PlusOne, SquareCenter) {
  const auto pts = square_center_points();
  const Solution s = plus_one_mink(pts, 0.75);
  EXPECT_LE(s.k, 2u);
  EXPECT_LE(oracle::brute_cost(chosen_points(pts, s), pts), 0.75);
  EXPECT_NE(std::find(s.indices.begin(), s.indices.end(), 0u), s.indices.end());
  const Solution m = plus_one_mineps(pts, 2);
  EXPECT_LE(m.k, 3u);
  EXPECT_LE(m.eps, 1 / std::sqrt(2.0) + 1e-12);
}

TEST(PlusOne, NonBindingAnchor) {
  // The optimal diagonal already passes through the first point.
  const auto pts = square_points();
  EXPECT_EQ(plus_one_mink(pts, 0.75).k, 2u);
}
