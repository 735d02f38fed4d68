#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpi/graph.hpp"
#include "lpi/vertex_set.hpp"

namespace lpi {

/// Simple path stored in canonical orientation: the vertex sequence is
/// lexicographically no greater than its reversal, so a path and its
/// reversal compare equal.
class Path {
 public:
  /// Throws on an empty sequence or a repeated vertex. Adjacency is not
  /// checked here; use `is_valid_in` or `Path::in`.
  explicit Path(std::vector<Vertex> vertices);

  /// Like the constructor, but also requires consecutive vertices to be adjacent in g.
  static Path in(const Graph& g, std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t order() const { return vertices_.size(); }
  std::size_t length() const { return vertices_.size() - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }

  std::optional<std::size_t> position(Vertex v) const;
  bool contains(Vertex v) const { return position(v).has_value(); }

  VertexSet vertex_set(std::size_t universe) const;
  bool is_valid_in(const Graph& g) const;

  std::string to_string() const;

  auto operator<=>(const Path&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

/// The segment of `p` between u and v inclusive, canonicalized.
Path subpath(const Path& p, Vertex u, Vertex v);

}  // namespace lpi
