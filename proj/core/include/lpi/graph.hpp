#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpi/vertex_set.hpp"

namespace lpi {

struct Edge {
  Vertex u;
  Vertex v;

  auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  /// Duplicate edges collapse; self-loops and out-of-range endpoints throw.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return rows_.size(); }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].size(); }

  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const;
};

/// Largest order representable with a one-byte graph6 header.
inline constexpr std::size_t kMaxGraph6Order = 62;

Graph parse_graph6(std::string_view record);
std::string to_graph6(const Graph& g);

/// One "n m" header followed by m "u v" lines.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

enum class InputFormat { kAuto, kGraph6, kEdgeList };

/// Reads every graph in a stream: graph6 records one per line, or a
/// concatenation of edge-list blocks. kAuto sniffs the first non-blank line.
std::vector<Graph> read_graphs(std::istream& in, InputFormat format = InputFormat::kAuto);

bool is_connected(const Graph& g);

/// Per-vertex BFS distance to the nearest source; nullopt marks unreachable.
class DistanceVector {
 public:
  DistanceVector(VertexSet sources, std::vector<std::optional<std::uint32_t>> dist)
      : sources_(std::move(sources)), dist_(std::move(dist)) {}

  std::optional<std::uint32_t> operator[](Vertex v) const { return dist_[v]; }
  bool reachable(Vertex v) const { return dist_[v].has_value(); }
  std::size_t size() const { return dist_.size(); }
  const VertexSet& sources() const { return sources_; }

 private:
  VertexSet sources_;
  std::vector<std::optional<std::uint32_t>> dist_;
};

DistanceVector distances_from_set(const Graph& g, const VertexSet& sources);

/// Subgraph induced by `keep`, relabelled in increasing vertex order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace lpi
