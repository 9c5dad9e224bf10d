#include "hullcoreset/geometry.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "hullcoreset/exact_sign.hpp"

namespace hullcoreset {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2;
// Forward error bound for (a - b)(c - d) -+ (e - f)(g - h) relative to the
// sum of the magnitudes of its two products.
constexpr double kFilterBound = (4.0 + 32.0 * kEps) * kEps;

int sign(double v) { return (v > 0.0) - (v < 0.0); }

// Exact sign of lhs +- rhs where lhs and rhs are products of coordinate
// differences; falls back to the expansion arithmetic when the filter fails.
int cross_sign_exact(const Point2& p, const Point2& q, const Point2& r, const Point2& s) {
  // (q - p) x (s - r) = qx sy - qx ry - px sy + px ry - qy sx + qy rx + py sx - py rx
  const std::array<exact::Product, 8> terms{{{q.x, s.y},
                                             {-q.x, r.y},
                                             {-p.x, s.y},
                                             {p.x, r.y},
                                             {-q.y, s.x},
                                             {q.y, r.x},
                                             {p.y, s.x},
                                             {-p.y, r.x}}};
  return exact::sign_of_sum(terms);
}

int dot_sign_exact(const Point2& p, const Point2& q, const Point2& r, const Point2& s) {
  const std::array<exact::Product, 8> terms{{{q.x, s.x},
                                             {-q.x, r.x},
                                             {-p.x, s.x},
                                             {p.x, r.x},
                                             {q.y, s.y},
                                             {-q.y, r.y},
                                             {-p.y, s.y},
                                             {p.y, r.y}}};
  return exact::sign_of_sum(terms);
}

}  // namespace

int cross_sign(const Point2& p, const Point2& q, const Point2& r, const Point2& s) {
  const double l = (q.x - p.x) * (s.y - r.y);
  const double rr = (q.y - p.y) * (s.x - r.x);
  const double det = l - rr;
  const double bound = kFilterBound * (std::abs(l) + std::abs(rr));
  if (det > bound || -det > bound) return sign(det);
  return cross_sign_exact(p, q, r, s);
}

int dot_sign(const Point2& p, const Point2& q, const Point2& r, const Point2& s) {
  const double l = (q.x - p.x) * (s.x - r.x);
  const double rr = (q.y - p.y) * (s.y - r.y);
  const double dot = l + rr;
  const double bound = kFilterBound * (std::abs(l) + std::abs(rr));
  if (dot > bound || -dot > bound) return sign(dot);
  return dot_sign_exact(p, q, r, s);
}

Orientation orient(const Point2& a, const Point2& b, const Point2& c) {
  return static_cast<Orientation>(cross_sign(a, b, a, c));
}

double dist_point_segment(const Point2& p, const Segment& s) {
  const double ux = s.b.x - s.a.x;
  const double uy = s.b.y - s.a.y;
  const double len2 = ux * ux + uy * uy;
  if (len2 == 0.0) return distance(p, s.a);
  const double t = (p.x - s.a.x) * ux + (p.y - s.a.y) * uy;
  if (t <= 0.0) return distance(p, s.a);
  if (t >= len2) return distance(p, s.b);
  return std::abs(signed_line_distance(s.a, s.b, p));
}

void Direction::approx(double& dx, double& dy) const {
  double x = to.x - from.x;
  double y = to.y - from.y;
  for (int k = 0; k < quarter_turns; ++k) {
    const double t = x;
    x = -y;
    y = t;
  }
  dx = x;
  dy = y;
}

int cross_sign(const Direction& d, const Point2& a, const Point2& b) {
  // cross(R v, w) for R a ccw quarter turn equals -dot(v, w).
  switch (d.quarter_turns) {
    case 0: return cross_sign(d.from, d.to, a, b);
    case 1: return -dot_sign(d.from, d.to, a, b);
    case 2: return -cross_sign(d.from, d.to, a, b);
    default: return dot_sign(d.from, d.to, a, b);
  }
}

DirectedLine DirectedLine::through(const Point2& origin, double dx, double dy) {
  const double len = std::hypot(dx, dy);
  if (!(len > 0.0)) throw std::invalid_argument("zero direction vector");
  return {origin, Direction::of(Point2{}, Point2{dx / len, dy / len})};
}

void DirectedLine::unit_direction(double& dx, double& dy) const {
  dir.approx(dx, dy);
  const double len = std::hypot(dx, dy);
  dx /= len;
  dy /= len;
}

ConvexChain::ConvexChain(std::vector<Point2> vertices, std::vector<std::size_t> source)
    : vertices_(std::move(vertices)), source_(std::move(source)) {
  const std::size_t n = vertices_.size();
  if (n == 0) throw std::invalid_argument("empty point set");
  if (source_.empty()) {
    source_.resize(n);
    std::iota(source_.begin(), source_.end(), std::size_t{0});
  } else if (source_.size() != n) {
    throw std::invalid_argument("source index count does not match vertex count");
  }
  if (n == 2 && vertices_[0] == vertices_[1]) {
    throw std::invalid_argument("duplicate chain vertex");
  }
  if (n < 3) return;
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(vertices_[i], vertices_[(i + 1) % n], vertices_[(i + 2) % n]) !=
        Orientation::right) {
      throw std::invalid_argument("chain is not strictly convex and clockwise");
    }
  }
  // Local right turns also hold for star polygons; the fan test rules out
  // chains that wind more than once.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (orient(vertices_[0], vertices_[i], vertices_[i + 1]) != Orientation::right) {
      throw std::invalid_argument("chain winds more than once");
    }
  }
}

ConvexChain convex_hull(std::span<const Point2> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(points[a], points[b]);
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t a, std::size_t b) { return points[a] == points[b]; }),
              order.end());

  if (order.size() == 1) return ConvexChain({points[order[0]]}, {order[0]});

  // Upper hull left to right, then lower hull right to left: both are
  // clockwise and keep strict right turns only.
  std::vector<std::size_t> hull;
  hull.reserve(order.size() + 1);
  auto push = [&](std::size_t idx, std::size_t floor) {
    while (hull.size() >= floor + 2 &&
           orient(points[hull[hull.size() - 2]], points[hull.back()], points[idx]) !=
               Orientation::right) {
      hull.pop_back();
    }
    hull.push_back(idx);
  };
  for (std::size_t idx : order) push(idx, 0);
  const std::size_t upper = hull.size() - 1;
  for (auto it = order.rbegin() + 1; it != order.rend(); ++it) push(*it, upper);
  hull.pop_back();  // leftmost point repeated

  std::vector<Point2> verts;
  verts.reserve(hull.size());
  for (std::size_t idx : hull) verts.push_back(points[idx]);
  return ConvexChain(std::move(verts), std::move(hull));
}

double dist_point_hull(const Point2& p, const ConvexChain& chain) {
  const std::size_t n = chain.size();
  if (n == 1) return distance(p, chain[0]);
  if (n == 2) return dist_point_segment(p, {chain[0], chain[1]});
  bool inside = true;
  for (std::size_t i = 0; i < n && inside; ++i) {
    inside = orient(chain[i], chain[chain.next(i)], p) != Orientation::left;
  }
  if (inside) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, dist_point_segment(p, {chain[i], chain[chain.next(i)]}));
  }
  return best;
}

}  // namespace hullcoreset
