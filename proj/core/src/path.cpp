#include "lpi/path.hpp"

#include <algorithm>
#include <sstream>

#include "lpi/error.hpp"

namespace lpi {

Path::Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InvalidArgument("a path needs at least one vertex");
  auto sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("path repeats a vertex");
  }
  if (std::lexicographical_compare(vertices_.rbegin(), vertices_.rend(), vertices_.begin(),
                                   vertices_.end())) {
    std::reverse(vertices_.begin(), vertices_.end());
  }
}

Path Path::in(const Graph& g, std::vector<Vertex> vertices) {
  Path p(std::move(vertices));
  if (!p.is_valid_in(g)) throw InvalidArgument("not a path of the graph: " + p.to_string());
  return p;
}

std::optional<std::size_t> Path::position(Vertex v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

VertexSet Path::vertex_set(std::size_t universe) const {
  return VertexSet::of(universe, std::span<const Vertex>(vertices_));
}

bool Path::is_valid_in(const Graph& g) const {
  for (auto v : vertices_)
    if (v >= g.order()) return false;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    if (!g.adjacent(vertices_[i], vertices_[i + 1])) return false;
  return true;
}

std::string Path::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < vertices_.size(); ++i) out << (i ? "," : "") << vertices_[i];
  out << ']';
  return out.str();
}

Path subpath(const Path& p, Vertex u, Vertex v) {
  const auto pu = p.position(u);
  const auto pv = p.position(v);
  if (!pu || !pv) throw InvalidArgument("subpath: endpoint not on " + p.to_string());
  const auto [lo, hi] = std::minmax(*pu, *pv);
  const auto vs = p.vertices();
  return Path(std::vector<Vertex>(vs.begin() + static_cast<std::ptrdiff_t>(lo),
                                  vs.begin() + static_cast<std::ptrdiff_t>(hi) + 1));
}

}  // namespace lpi
