#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace hullcoreset {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2() = default;
  Point2(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw std::invalid_argument("non-finite point coordinate");
    }
  }

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Lexicographic (x, then y) order.
inline bool lex_less(const Point2& a, const Point2& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

struct Segment {
  Point2 a;
  Point2 b;
};

enum class Orientation { right = -1, collinear = 0, left = 1 };

/// Sign of the signed area of triangle (a, b, c). Exact.
Orientation orient(const Point2& a, const Point2& b, const Point2& c);

/// Exact sign of cross(q - p, s - r).
int cross_sign(const Point2& p, const Point2& q, const Point2& r, const Point2& s);

/// Exact sign of dot(q - p, s - r).
int dot_sign(const Point2& p, const Point2& q, const Point2& r, const Point2& s);

inline double squared_distance(const Point2& a, const Point2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double distance(const Point2& a, const Point2& b) {
  return std::sqrt(squared_distance(a, b));
}

/// Signed distance of p from the line through a and b, positive on the left
/// of a->b. Requires a != b.
inline double signed_line_distance(const Point2& a, const Point2& b, const Point2& p) {
  const double ux = b.x - a.x;
  const double uy = b.y - a.y;
  const double cross = ux * (p.y - a.y) - uy * (p.x - a.x);
  return cross / std::sqrt(ux * ux + uy * uy);
}

double dist_point_segment(const Point2& p, const Segment& s);

/// Direction of the vector `to - from` rotated counterclockwise by
/// `quarter_turns` right angles. Kept symbolic so that side tests against it
/// stay exact.
struct Direction {
  Point2 from;
  Point2 to;
  int quarter_turns = 0;

  static Direction of(const Point2& from, const Point2& to, int quarter_turns = 0) {
    return {from, to, ((quarter_turns % 4) + 4) % 4};
  }
  Direction reversed() const { return of(from, to, quarter_turns + 2); }
  Direction rotated_ccw() const { return of(from, to, quarter_turns + 1); }

  /// Floating-point approximation of the direction vector.
  void approx(double& dx, double& dy) const;
};

/// Exact sign of cross(d, b - a): positive when b lies further to the left of
/// d than a.
int cross_sign(const Direction& d, const Point2& a, const Point2& b);

/// Directed line through `origin` with direction `dir`.
struct DirectedLine {
  Point2 origin;
  Direction dir;

  /// Line through `origin` along the unit vector obtained by normalizing
  /// (dx, dy). Throws std::invalid_argument for a zero vector.
  static DirectedLine through(const Point2& origin, double dx, double dy);
  /// Line through `origin` orthogonal to a->b, oriented so that the points
  /// whose projection onto a->b precedes `origin` lie on its left.
  static DirectedLine orthogonal(const Point2& origin, const Point2& a, const Point2& b) {
    return {origin, Direction::of(a, b, 1)};
  }

  /// +1 left, 0 on the line, -1 right. Exact.
  int side(const Point2& p) const { return cross_sign(dir, origin, p); }
  /// Unit direction (approximate for symbolic directions).
  void unit_direction(double& dx, double& dy) const;
};

/// Vertices in strict convex position, listed clockwise (negative signed
/// area in a y-up frame). Each vertex may carry the index it had in the input
/// it was derived from.
class ConvexChain {
 public:
  /// Validates the clockwise strict-convexity invariants; throws
  /// std::invalid_argument when they do not hold. When `source` is empty the
  /// identity mapping is used.
  explicit ConvexChain(std::vector<Point2> vertices, std::vector<std::size_t> source = {});

  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }
  std::span<const Point2> vertices() const { return vertices_; }

  std::size_t source_index(std::size_t i) const { return source_[i]; }
  std::span<const std::size_t> source_indices() const { return source_; }

  std::size_t next(std::size_t i) const { return i + 1 == size() ? 0 : i + 1; }
  std::size_t prev(std::size_t i) const { return i == 0 ? size() - 1 : i - 1; }

  /// Number of clockwise steps from i to j (0 when i == j).
  std::size_t steps(std::size_t i, std::size_t j) const {
    return j >= i ? j - i : j + size() - i;
  }
  /// Vertex index `offset` clockwise steps after i.
  std::size_t advance(std::size_t i, std::size_t offset) const { return (i + offset) % size(); }

 private:
  std::vector<Point2> vertices_;
  std::vector<std::size_t> source_;
};

/// Clockwise hull of the extreme points of `points`. Duplicates and points in
/// the relative interior of hull edges are dropped; each chain vertex reports
/// the index of its first occurrence in `points`. Throws std::invalid_argument
/// on empty input.
ConvexChain convex_hull(std::span<const Point2> points);

/// Distance from p to the convex hull described by `chain`; 0 when p lies
/// inside or on the boundary.
double dist_point_hull(const Point2& p, const ConvexChain& chain);

}  // namespace hullcoreset
