#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hullcoreset {

struct SolutionMeta {
  std::string solver;
  std::string backend;
  std::optional<std::uint64_t> seed;
  std::uint64_t cost0_queries = 0;
  std::uint64_t decider_calls = 0;
  std::size_t sample_size = 0;
  std::size_t extract_size = 0;
};

/// A chosen subset together with its realized cost. `indices` refer to the
/// input the solver was given (for chain solvers, the chain's source indices)
/// and are listed in clockwise hull order when they form a polygon.
struct Solution {
  std::vector<std::size_t> indices;
  std::size_t k = 0;
  double eps = 0.0;
  SolutionMeta meta;
};

}  // namespace hullcoreset
