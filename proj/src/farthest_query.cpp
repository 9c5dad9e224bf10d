#include "hullcoreset/farthest_query.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hullcoreset {

const char* to_string(Backend backend) {
  return backend == Backend::naive ? "naive" : "canonical";
}

Backend backend_from_string(const std::string& name) {
  if (name == "naive") return Backend::naive;
  if (name == "canonical") return Backend::canonical;
  throw std::invalid_argument("unknown backend '" + name + "'");
}

ExtremeVertexLocator::ExtremeVertexLocator(std::shared_ptr<const ConvexChain> chain)
    : chain_(std::move(chain)) {
  const ConvexChain& c = *chain_;
  const std::size_t n = c.size();
  if (n < 3) return;
  edge_angle_.resize(n);
  double px = c[1].x - c[0].x;
  double py = c[1].y - c[0].y;
  edge_angle_[0] = std::atan2(py, px);
  for (std::size_t k = 1; k < n; ++k) {
    const Point2& a = c[k];
    const Point2& b = c[c.next(k)];
    const double ex = b.x - a.x;
    const double ey = b.y - a.y;
    const double turn = std::atan2(-(px * ey - py * ex), px * ex + py * ey);
    edge_angle_[k] = edge_angle_[k - 1] - turn;
    px = ex;
    py = ey;
  }
}

std::size_t ExtremeVertexLocator::leftmost(const Direction& d) const {
  const ConvexChain& c = *chain_;
  const std::size_t n = c.size();
  if (n == 1) return 0;
  if (n == 2) return cross_sign(d, c[0], c[1]) > 0 ? 1 : 0;

  // The clockwise edge leaving the leftmost vertex points along d.
  constexpr double kTwoPi = 2 * std::numbers::pi;
  double dx, dy;
  d.approx(dx, dy);
  double target = std::atan2(dy, dx);
  const double top = edge_angle_[0];
  while (target > top) target -= kTwoPi;
  while (target <= top - kTwoPi) target += kTwoPi;
  const auto it = std::partition_point(edge_angle_.begin(), edge_angle_.end(),
                                       [&](double a) { return a > target; });
  std::size_t k = static_cast<std::size_t>(it - edge_angle_.begin()) % n;

  for (std::size_t guard = 0; guard < n && cross_sign(d, c[k], c[c.next(k)]) > 0; ++guard) {
    k = c.next(k);
  }
  for (std::size_t guard = 0; guard < n && cross_sign(d, c[k], c[c.prev(k)]) > 0; ++guard) {
    k = c.prev(k);
  }
  return k;
}

FarthestQuery::FarthestQuery(std::shared_ptr<const ConvexChain> chain, Backend backend)
    : chain_(std::move(chain)), backend_(backend), extremes_(chain_) {
  if (backend_ == Backend::canonical) build_canonical();
}

FarthestQuery::FarthestQuery(const ConvexChain& chain, Backend backend)
    : FarthestQuery(std::make_shared<const ConvexChain>(chain), backend) {}

void FarthestQuery::build_canonical() {
  const std::size_t n = size();
  if (n > std::numeric_limits<std::uint32_t>::max() / 4) {
    throw std::length_error("chain too large for the canonical backend");
  }
  nodes_.assign(4 * n, Node{});
  steps_.clear();
  steps_.reserve(n * (1 + static_cast<std::size_t>(std::log2(static_cast<double>(n) + 1))));
  build_node(0, 0, static_cast<std::uint32_t>(n - 1));
}

bool FarthestQuery::beats(std::size_t row, std::uint32_t challenger,
                          std::uint32_t incumbent) const {
  const Point2& q = (*chain_)[row];
  const double dc = squared_distance(q, (*chain_)[challenger]);
  const double di = squared_distance(q, (*chain_)[incumbent]);
  return dc > di || (dc == di && challenger < incumbent);
}

std::uint32_t FarthestQuery::column_at(const Node& node, std::int64_t row) const {
  const auto first = steps_.begin() + node.steps_begin;
  const auto last = steps_.begin() + node.steps_end;
  const auto it = std::upper_bound(first, last, row, [](std::int64_t r, const Step& s) {
    return r < s.row_start;
  });
  return std::prev(it)->column;
}

std::uint32_t FarthestQuery::build_node(std::uint32_t id, std::uint32_t lo, std::uint32_t hi) {
  const auto n = static_cast<std::int64_t>(size());
  const std::int64_t row_lo = static_cast<std::int64_t>(hi) + 1 - n;
  const std::int64_t row_hi = static_cast<std::int64_t>(lo) - 1;
  Node node{lo, hi, 0, 0};

  if (lo == hi) {
    node.steps_begin = static_cast<std::uint32_t>(steps_.size());
    if (row_lo <= row_hi) steps_.push_back({row_lo, lo});
    node.steps_end = static_cast<std::uint32_t>(steps_.size());
    nodes_[id] = node;
    return id;
  }

  const std::uint32_t mid = lo + (hi - lo) / 2;
  const Node left = nodes_[build_node(2 * id + 1, lo, mid)];
  const Node right = nodes_[build_node(2 * id + 2, mid + 1, hi)];

  node.steps_begin = static_cast<std::uint32_t>(steps_.size());
  if (row_lo <= row_hi) {
    auto chain_row = [n](std::int64_t r) { return static_cast<std::size_t>(r < 0 ? r + n : r); };
    auto right_wins = [&](std::int64_t r) {
      return beats(chain_row(r), column_at(right, r), column_at(left, r));
    };
    // Smallest row at which the right half takes over; the advantage of the
    // later columns never decreases with the row.
    std::int64_t a = row_lo, b = row_hi + 1;
    while (a < b) {
      const std::int64_t m = a + (b - a) / 2;
      if (right_wins(m)) b = m; else a = m + 1;
    }
    const std::int64_t switch_row = a;

    auto append_restricted = [&](const Node& child, std::int64_t from, std::int64_t to) {
      if (from > to) return;
      auto first = steps_.begin() + child.steps_begin;
      auto last = steps_.begin() + child.steps_end;
      auto it = std::prev(std::upper_bound(first, last, from, [](std::int64_t r, const Step& s) {
        return r < s.row_start;
      }));
      std::size_t idx = static_cast<std::size_t>(it - steps_.begin());
      const std::size_t end = child.steps_end;
      Step head = steps_[idx];
      head.row_start = from;
      steps_.push_back(head);
      for (++idx; idx < end; ++idx) {
        const Step s = steps_[idx];
        if (s.row_start > to) break;
        steps_.push_back(s);
      }
    };
    append_restricted(left, row_lo, switch_row - 1);
    append_restricted(right, switch_row, row_hi);
  }
  node.steps_end = static_cast<std::uint32_t>(steps_.size());
  nodes_[id] = node;
  return id;
}

template <typename Visit>
void FarthestQuery::for_each_canonical(std::uint32_t id, std::size_t lo, std::size_t hi,
                                       Visit&& visit) const {
  const Node& node = nodes_[id];
  if (hi < node.lo || lo > node.hi) return;
  if (lo <= node.lo && node.hi <= hi) {
    visit(node);
    return;
  }
  for_each_canonical(2 * id + 1, lo, hi, visit);
  for_each_canonical(2 * id + 2, lo, hi, visit);
}

template <typename Visit>
void FarthestQuery::for_each_range(Arc arc, Visit&& visit) const {
  if (arc.is_empty()) return;
  if (arc.first <= arc.last) {
    visit(arc.first, arc.last);
  } else {
    visit(arc.first, size() - 1);
    visit(std::size_t{0}, arc.last);
  }
}

std::optional<FarthestHit> FarthestQuery::scan(const Point2& q, Arc arc) const {
  if (arc.is_empty()) return std::nullopt;
  const ConvexChain& c = *chain_;
  std::size_t best = Arc::npos;
  double best_d2 = -1.0;
  const std::size_t count = c.steps(arc.first, arc.last) + 1;
  for (std::size_t t = 0, v = arc.first; t < count; ++t, v = c.next(v)) {
    const double d2 = squared_distance(q, c[v]);
    if (d2 > best_d2 || (d2 == best_d2 && v < best)) {
      best = v;
      best_d2 = d2;
    }
  }
  return FarthestHit{best, std::sqrt(best_d2)};
}

std::optional<FarthestHit> FarthestQuery::canonical_query(std::size_t q, Arc arc) const {
  if (arc.is_empty()) return std::nullopt;
  const ConvexChain& c = *chain_;
  const auto n = static_cast<std::int64_t>(size());

  std::size_t best = Arc::npos;
  double best_d2 = -1.0;
  auto offer = [&](std::size_t v) {
    const double d2 = squared_distance(c[q], c[v]);
    if (d2 > best_d2 || (d2 == best_d2 && v < best)) {
      best = v;
      best_d2 = d2;
    }
  };
  auto search = [&](Arc part) {
    for_each_range(part, [&](std::size_t lo, std::size_t hi) {
      for_each_canonical(0, lo, hi, [&](const Node& node) {
        const auto row = static_cast<std::int64_t>(q) - (q < node.lo ? 0 : n);
        offer(column_at(node, row));
      });
    });
  };

  const bool contains_q = c.steps(arc.first, q) <= c.steps(arc.first, arc.last);
  if (!contains_q) {
    search(arc);
  } else {
    offer(q);
    if (q != arc.first) search(Arc::between(arc.first, c.prev(q)));
    if (q != arc.last) search(Arc::between(c.next(q), arc.last));
  }
  return FarthestHit{best, std::sqrt(best_d2)};
}

std::optional<FarthestHit> FarthestQuery::farthest_in_arc(std::size_t q, Arc arc) const {
  const std::size_t n = size();
  if (q >= n) throw std::out_of_range("query vertex out of range");
  if (!arc.is_empty() && (arc.first >= n || arc.last >= n)) {
    throw std::out_of_range("arc index out of range");
  }
  if (backend_ == Backend::naive) return scan((*chain_)[q], arc);
  return canonical_query(q, arc);
}

std::size_t FarthestQuery::checked_vertex(const Point2& q) const {
  const auto verts = chain_->vertices();
  const auto it = std::find(verts.begin(), verts.end(), q);
  if (it == verts.end()) {
    throw std::invalid_argument("canonical farthest queries must originate at a chain vertex");
  }
  return static_cast<std::size_t>(it - verts.begin());
}

std::optional<FarthestHit> FarthestQuery::farthest_in_arc(const Point2& q, Arc arc) const {
  if (backend_ == Backend::naive) {
    const std::size_t n = size();
    if (!arc.is_empty() && (arc.first >= n || arc.last >= n)) {
      throw std::out_of_range("arc index out of range");
    }
    return scan(q, arc);
  }
  return canonical_query(checked_vertex(q), arc);
}

void FarthestQuery::require_incident(const Point2& q, const DirectedLine& line) const {
  double dx, dy;
  line.dir.approx(dx, dy);
  const double len = std::hypot(dx, dy);
  const double off = std::abs(dx * (q.y - line.origin.y) - dy * (q.x - line.origin.x)) / len;
  const double scale = std::max({1.0, std::abs(q.x), std::abs(q.y)});
  if (!(off <= 1e-9 * scale)) {
    throw std::invalid_argument("query point does not lie on the query line");
  }
}

Arc FarthestQuery::left_arc(const DirectedLine& line) const {
  const ConvexChain& c = *chain_;
  const std::size_t n = c.size();
  const std::size_t top = extremes_.leftmost(line.dir);
  if (line.side(c[top]) < 0) return Arc::empty();
  const std::size_t bottom = extremes_.leftmost(line.dir.reversed());
  if (line.side(c[bottom]) >= 0) return Arc::between(0, n - 1);

  // Sides are nondecreasing from bottom to top and nonincreasing back.
  std::size_t a = 0, b = c.steps(bottom, top);
  while (a < b) {
    const std::size_t m = a + (b - a) / 2;
    if (line.side(c[c.advance(bottom, m)]) >= 0) b = m; else a = m + 1;
  }
  const std::size_t first = c.advance(bottom, a);

  a = 0;
  b = c.steps(top, bottom);
  while (a < b) {
    const std::size_t m = a + (b - a + 1) / 2;
    if (line.side(c[c.advance(top, m)]) >= 0) a = m; else b = m - 1;
  }
  return Arc::between(first, c.advance(top, a));
}

std::optional<FarthestHit> FarthestQuery::farthest_in_halfplane(std::size_t q,
                                                                const DirectedLine& line) const {
  if (q >= size()) throw std::out_of_range("query vertex out of range");
  require_incident((*chain_)[q], line);
  return farthest_in_arc(q, left_arc(line));
}

std::optional<FarthestHit> FarthestQuery::farthest_in_halfplane(const Point2& q,
                                                                const DirectedLine& line) const {
  require_incident(q, line);
  return farthest_in_arc(q, left_arc(line));
}

std::size_t FarthestQuery::canonical_node_count(Arc arc) const {
  if (backend_ == Backend::naive) return 0;
  std::size_t count = 0;
  for_each_range(arc, [&](std::size_t lo, std::size_t hi) {
    for_each_canonical(0, lo, hi, [&](const Node&) { ++count; });
  });
  return count;
}

}  // namespace hullcoreset
