#include "lpi/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <istream>
#include <sstream>
#include <string>

#include "lpi/error.hpp"

namespace lpi {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw InvalidArgument("graph must have at least one vertex");
  Graph g(n);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    if (!g.rows_[e.u].contains(e.v)) {
      g.rows_[e.u].insert(e.v);
      g.rows_[e.v].insert(e.u);
      ++g.edge_count_;
    }
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    rows_[u].for_each([&](Vertex v) {
      if (u < v) out.push_back({u, v});
    });
  }
  return out;
}

std::size_t GraphHash::operator()(const Graph& g) const {
  std::size_t h = std::hash<std::size_t>{}(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (auto w : g.neighbors(v).words()) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
  }
  return h;
}

// graph6: header byte n+63, then the upper triangle in column-major order
// ((0,1),(0,2),(1,2),(0,3),...) packed six bits per byte, MSB first, +63.

Graph parse_graph6(std::string_view record) {
  while (!record.empty() && (record.back() == '\n' || record.back() == '\r')) {
    record.remove_suffix(1);
  }
  if (record.empty()) throw ParseError("graph6: empty record");
  const auto header = static_cast<unsigned char>(record[0]);
  if (header == 126) throw ParseError("graph6: extended size headers (n > 62) are not supported");
  if (header < 64 || header > 125) {
    throw ParseError("graph6: malformed header byte " + std::to_string(header));
  }
  const std::size_t n = header - 63;
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t expected_bytes = (bits + 5) / 6;
  if (record.size() != expected_bytes + 1) {
    throw ParseError("graph6: expected " + std::to_string(expected_bytes) +
                     " data bytes for n=" + std::to_string(n) + ", got " +
                     std::to_string(record.size() - 1));
  }
  for (std::size_t i = 1; i < record.size(); ++i) {
    const auto c = static_cast<unsigned char>(record[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: data byte " + std::to_string(c) + " out of range 63..126");
    }
  }
  auto bit_at = [&](std::size_t k) {
    const auto c = static_cast<unsigned>(static_cast<unsigned char>(record[1 + k / 6]) - 63);
    return ((c >> (5 - k % 6)) & 1U) != 0;
  };
  for (std::size_t k = bits; k < expected_bytes * 6; ++k) {
    if (bit_at(k)) throw ParseError("graph6: nonzero padding bits");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (bit_at(k)) edges.push_back({i, j});
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) {
    throw InvalidArgument("graph6: order " + std::to_string(n) + " exceeds supported maximum 62");
  }
  const std::size_t bits = n * (n - 1) / 2;
  std::vector<unsigned> groups((bits + 5) / 6, 0);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) groups[k / 6] |= 1U << (5 - k % 6);
    }
  }
  std::string out;
  out.reserve(1 + groups.size());
  out.push_back(static_cast<char>(n + 63));
  for (auto group : groups) out.push_back(static_cast<char>(group + 63));
  return out;
}

namespace {

class TokenReader {
 public:
  explicit TokenReader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  std::size_t next_number(const char* what) {
    skip_space();
    if (pos_ == text_.size()) throw ParseError(std::string("edge list: missing ") + what);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) {
      throw ParseError(std::string("edge list: expected a non-negative integer for ") + what);
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Graph read_edge_list_block(TokenReader& reader) {
  const auto n = reader.next_number("vertex count");
  const auto m = reader.next_number("edge count");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto u = reader.next_number("edge endpoint");
    const auto v = reader.next_number("edge endpoint");
    if (u >= n || v >= n) {
      throw ParseError("edge list: endpoint out of range in edge " + std::to_string(i));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  try {
    return Graph::from_edge_list(n, edges);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

bool looks_like_edge_list(std::string_view line) {
  return line.find_first_of(" \t") != std::string_view::npos;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  TokenReader reader(text);
  auto g = read_edge_list_block(reader);
  if (!reader.at_end()) throw ParseError("edge list: trailing data after the last edge");
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::vector<Graph> read_graphs(std::istream& in, InputFormat format) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (format == InputFormat::kAuto) {
    format = InputFormat::kGraph6;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (looks_like_edge_list(line)) format = InputFormat::kEdgeList;
      break;
    }
  }
  std::vector<Graph> graphs;
  if (format == InputFormat::kEdgeList) {
    TokenReader reader(text);
    while (!reader.at_end()) graphs.push_back(read_edge_list_block(reader));
    return graphs;
  }
  std::istringstream lines(text);
  std::size_t line_no = 0;
  for (std::string line; std::getline(lines, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return graphs;
}

bool is_connected(const Graph& g) {
  const auto dist = distances_from_set(g, VertexSet::of(g.order(), {0}));
  for (Vertex v = 0; v < g.order(); ++v)
    if (!dist.reachable(v)) return false;
  return true;
}

DistanceVector distances_from_set(const Graph& g, const VertexSet& sources) {
  if (sources.universe() != g.order()) {
    throw InvalidArgument("source set universe does not match graph order");
  }
  if (sources.empty()) throw InvalidArgument("distances_from_set: empty source set");
  std::vector<std::optional<std::uint32_t>> dist(g.order());
  std::deque<Vertex> queue;
  sources.for_each([&](Vertex s) {
    dist[s] = 0;
    queue.push_back(s);
  });
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    g.neighbors(v).for_each([&](Vertex w) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push_back(w);
      }
    });
  }
  return DistanceVector(sources, std::move(dist));
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> relabel(g.order(), 0);
  const auto kept = keep.to_vector();
  if (kept.empty()) throw InvalidArgument("induced_subgraph: empty vertex set");
  for (std::size_t i = 0; i < kept.size(); ++i) relabel[kept[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (keep.contains(e.u) && keep.contains(e.v)) edges.push_back({relabel[e.u], relabel[e.v]});
  }
  return Graph::from_edge_list(kept.size(), edges);
}

}  // namespace lpi
