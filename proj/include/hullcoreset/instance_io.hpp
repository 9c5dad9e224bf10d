#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hullcoreset/geometry.hpp"
#include "hullcoreset/solution.hpp"

namespace hullcoreset::io {

enum class PointFormat { csv, json };

PointFormat format_from_string(const std::string& name);
/// ".json" selects json, anything else csv.
PointFormat format_from_path(const std::filesystem::path& path);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Distinct points in first-occurrence order. source[i] is the 0-based
/// position of points[i] in the raw input.
struct PointSet {
  std::vector<Point2> points;
  std::vector<std::size_t> source;
  std::vector<std::string> warnings;
};

/// csv: one "x,y" per line, blank lines skipped. json: array of [x, y].
/// Throws ParseError naming the offending line (json: the element number).
PointSet parse_points(const std::string& text, PointFormat format);
PointSet read_points(const std::filesystem::path& path, PointFormat format);

/// Shortest round-trip decimal representation.
std::string emit_points(std::span<const Point2> points, PointFormat format);

enum class GenKind { convex_circle, convex_perturbed, uniform_square, clustered, collinear };

GenKind gen_kind_from_string(const std::string& name);
const char* to_string(GenKind kind);

/// Deterministic per (kind, n, seed). Convex kinds are listed clockwise and
/// are in strictly convex position.
std::vector<Point2> gen_instance(GenKind kind, std::size_t n, std::uint64_t seed);

struct GenSpec {
  GenKind kind;
  std::size_t n;
  std::uint64_t seed;
};

/// "kind:n:seed"; n accepts a k/m suffix (1k = 1000).
GenSpec parse_gen_spec(const std::string& spec);
std::size_t parse_count(const std::string& text);

/// FNV-1a over the coordinate bit patterns, as 16 hex digits.
std::string input_digest(std::span<const Point2> points);

/// Nearest double to v printed with 12 significant digits.
double round_sig(double v, int digits = 12);

struct RunRecord {
  std::string problem;
  std::size_t n = 0;
  std::string input_digest;
  std::optional<double> eps;
  std::optional<std::size_t> k;
  Solution solution;
  std::string backend;
  std::string apsp;
  std::optional<std::uint64_t> seed;
  std::int64_t elapsed_ms = 0;
  std::uint64_t cost0_queries = 0;
};

nlohmann::ordered_json to_json(const RunRecord& record);

}  // namespace hullcoreset::io
