#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lpi/graph.hpp"

namespace lpi {

inline constexpr std::size_t kMaxGeneratedOrder = 8;

/// Upper triangle as a bit-string in graph6 order ((0,1),(0,2),(1,2),(0,3),...),
/// first pair in the most significant position. Integer order on codes of a
/// fixed n is lexicographic order on the bit-strings. Requires n <= 11.
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// Smallest adjacency_code over all vertex relabellings.
std::uint64_t canonical_code(const Graph& g);

/// The relabelled graph attaining canonical_code.
Graph canonical_form(const Graph& g);

/// One canonical representative per isomorphism class of connected graphs
/// on exactly n vertices, sorted by canonical code. 1 <= n <= 8.
std::vector<Graph> generate_connected_graphs(std::size_t n);

/// All connected graphs on 1..n vertices, ordered by n, then code.
std::vector<Graph> generate_connected_graphs_up_to(std::size_t n);

}  // namespace lpi
