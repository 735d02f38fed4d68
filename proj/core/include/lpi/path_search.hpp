#pragma once

#include <cstddef>
#include <vector>

#include "lpi/error.hpp"
#include "lpi/graph.hpp"
#include "lpi/path.hpp"

namespace lpi {

inline constexpr std::size_t kDefaultPathCap = 100'000;

struct LongestPathSet {
  std::size_t length = 0;   // l(G), in edges
  std::vector<Path> paths;  // canonical, sorted, each with length+1 vertices
  bool truncated = false;   // more than `cap` longest paths exist
};

/// Exact l(G): the maximum edge count over all simple paths (over all components).
std::size_t longest_path_length(const Graph& g, const Deadline& deadline = {});

/// All longest paths, deduplicated under reversal and sorted. If more than
/// `cap` exist, the `cap` lexicographically smallest are returned and
/// `truncated` is set.
LongestPathSet enumerate_longest_paths(const Graph& g, std::size_t cap = kDefaultPathCap,
                                       const Deadline& deadline = {});

/// Every simple path, single vertices included, by unpruned DFS. Slow
/// reference used to cross-check the pruned search; meant for n <= 10.
std::vector<Path> enumerate_all_simple_paths_oracle(const Graph& g);

/// True iff l(G) = n-1. Uses subset dynamic programming for n <= 20 and the
/// pruned search above that.
bool has_hamiltonian_path(const Graph& g, const Deadline& deadline = {});

/// Subset DP over (visited set, end vertex); n <= 24.
bool has_hamiltonian_path_dp(const Graph& g);

}  // namespace lpi
