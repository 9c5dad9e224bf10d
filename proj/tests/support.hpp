#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "hullcoreset/geometry.hpp"

namespace testing_support {

using hullcoreset::ConvexChain;
using hullcoreset::Point2;

inline ConvexChain square_chain() {
  return ConvexChain({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
}

inline std::vector<Point2> square_points() { return {{0, 0}, {0, 1}, {1, 1}, {1, 0}}; }

inline std::vector<Point2> square_center_points() {
  return {{0, 0}, {0, 1}, {1, 1}, {1, 0}, {0.5, 0.5}};
}

inline bool rel_close(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

// Thresholds straddling a critical value, clear of rounding in either
// evaluation route.
inline double just_above(double v) { return v * (1 + 1e-12) + 1e-300; }
inline double just_below(double v) { return v * (1 - 1e-12); }

// Uniformly random convex polygon (Valtr), as a clockwise chain.
inline ConvexChain random_convex_chain(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  auto split_chain = [&](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const double lo = v.front(), hi = v.back();
    std::vector<double> out;
    double last_a = lo, last_b = lo;
    for (std::size_t t = 1; t + 1 < v.size(); ++t) {
      if (coin(rng)) {
        out.push_back(v[t] - last_a);
        last_a = v[t];
      } else {
        out.push_back(last_b - v[t]);
        last_b = v[t];
      }
    }
    out.push_back(hi - last_a);
    out.push_back(last_b - hi);
    return out;
  };
  while (true) {
    std::vector<double> xs(n), ys(n);
    for (auto& x : xs) x = unit(rng);
    for (auto& y : ys) y = unit(rng);
    std::vector<double> dx = split_chain(xs), dy = split_chain(ys);
    std::shuffle(dy.begin(), dy.end(), rng);
    std::vector<std::pair<double, double>> vec(n);
    for (std::size_t t = 0; t < n; ++t) vec[t] = {dx[t], dy[t]};
    std::sort(vec.begin(), vec.end(), [](const auto& a, const auto& b) {
      return std::atan2(a.second, a.first) < std::atan2(b.second, b.first);
    });
    std::vector<Point2> pts;
    double x = 0, y = 0;
    for (const auto& [vx, vy] : vec) {
      pts.emplace_back(x, y);
      x += vx;
      y += vy;
    }
    const ConvexChain hull = hullcoreset::convex_hull(pts);
    if (hull.size() != n) continue;
    return ConvexChain(std::vector<Point2>(hull.vertices().begin(), hull.vertices().end()));
  }
}

inline std::vector<Point2> random_general_points(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point2> pts;
  if (n <= 20 && std::bernoulli_distribution(0.3)(rng)) {
    // Small lattice: plenty of collinear triples.
    std::uniform_int_distribution<int> cell(0, 4);
    while (pts.size() < n) {
      const Point2 p(cell(rng), cell(rng));
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    return pts;
  }
  for (std::size_t t = 0; t < n; ++t) {
    const double px = unit(rng);
    pts.emplace_back(px, unit(rng));
  }
  return pts;
}

}  // namespace testing_support
