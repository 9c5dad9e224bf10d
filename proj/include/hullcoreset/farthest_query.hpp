#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hullcoreset/geometry.hpp"

namespace hullcoreset {

/// Clockwise run of chain vertices from `first` to `last`, both inclusive.
/// The empty arc is a dedicated sentinel; (i, i) is the singleton {i}.
struct Arc {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::size_t first = npos;
  std::size_t last = npos;

  static Arc empty() { return {}; }
  static Arc between(std::size_t first, std::size_t last) { return {first, last}; }
  bool is_empty() const { return first == npos; }

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct FarthestHit {
  std::size_t index;
  double distance;
};

enum class Backend { naive, canonical };

const char* to_string(Backend backend);
Backend backend_from_string(const std::string& name);

/// Locates the vertex of a convex chain that is extreme along a direction in
/// O(log n): an approximate edge-angle table gives the start and exact
/// comparisons finish the search.
class ExtremeVertexLocator {
 public:
  explicit ExtremeVertexLocator(std::shared_ptr<const ConvexChain> chain);

  /// Vertex maximizing cross(d, v), i.e. the one furthest to the left of d.
  std::size_t leftmost(const Direction& d) const;

 private:
  std::shared_ptr<const ConvexChain> chain_;
  std::vector<double> edge_angle_;  // unwrapped, strictly decreasing
};

/// Farthest-vertex queries over a convex chain, restricted to a clockwise arc
/// or to the vertices in the closed left halfplane of a directed line.
///
/// The canonical backend keeps a balanced interval tree over the chain
/// indices. For a node covering columns [a, b], every chain vertex outside
/// [a, b] is a valid query row, and the rows, taken clockwise from b + 1,
/// precede the columns. For four vertices in that clockwise order the two
/// diagonals of their convex quadrilateral outweigh either pair of opposite
/// sides, so the farthest column of a node is a nondecreasing function of the
/// row. Each node stores that function as a staircase of (row, column) steps;
/// a query looks up one step per canonical node. Queries must be issued from
/// chain vertices; the naive backend also accepts arbitrary points.
///
/// Ties are broken toward the smaller chain index.
class FarthestQuery {
 public:
  FarthestQuery(std::shared_ptr<const ConvexChain> chain, Backend backend);
  FarthestQuery(const ConvexChain& chain, Backend backend);

  Backend backend() const { return backend_; }
  const ConvexChain& chain() const { return *chain_; }
  std::size_t size() const { return chain_->size(); }

  /// Farthest vertex of `arc` from chain vertex `q`; nullopt for the empty
  /// arc. Throws std::out_of_range for invalid indices.
  std::optional<FarthestHit> farthest_in_arc(std::size_t q, Arc arc) const;
  /// Point-query form. The canonical backend requires `q` to be a chain
  /// vertex and throws std::invalid_argument otherwise.
  std::optional<FarthestHit> farthest_in_arc(const Point2& q, Arc arc) const;

  /// Farthest vertex from chain vertex `q` among the vertices on or to the
  /// left of `line`, which must pass through q (1e-9 relative tolerance).
  std::optional<FarthestHit> farthest_in_halfplane(std::size_t q, const DirectedLine& line) const;
  std::optional<FarthestHit> farthest_in_halfplane(const Point2& q, const DirectedLine& line) const;

  /// Vertices on or to the left of `line`, as a clockwise arc.
  Arc left_arc(const DirectedLine& line) const;

  /// Number of canonical nodes the arc decomposes into (0 for the naive
  /// backend).
  std::size_t canonical_node_count(Arc arc) const;

 private:
  struct Step {
    std::int64_t row_start;  // unrolled row where this column becomes farthest
    std::uint32_t column;
  };
  struct Node {
    std::uint32_t lo, hi;  // column range
    std::uint32_t steps_begin, steps_end;
  };

  void build_canonical();
  std::uint32_t build_node(std::uint32_t id, std::uint32_t lo, std::uint32_t hi);
  std::uint32_t column_at(const Node& node, std::int64_t row) const;
  bool beats(std::size_t row, std::uint32_t challenger, std::uint32_t incumbent) const;

  template <typename Visit>
  void for_each_canonical(std::uint32_t id, std::size_t lo, std::size_t hi, Visit&& visit) const;
  template <typename Visit>
  void for_each_range(Arc arc, Visit&& visit) const;

  std::optional<FarthestHit> scan(const Point2& q, Arc arc) const;
  std::optional<FarthestHit> canonical_query(std::size_t q, Arc arc) const;
  std::size_t checked_vertex(const Point2& q) const;
  void require_incident(const Point2& q, const DirectedLine& line) const;

  std::shared_ptr<const ConvexChain> chain_;
  Backend backend_;
  ExtremeVertexLocator extremes_;
  std::vector<Node> nodes_;
  std::vector<Step> steps_;
};

}  // namespace hullcoreset
