#include "lpi/generate.hpp"

#include <algorithm>
#include <iterator>
#include <bit>
#include <set>
#include <string>

#include "lpi/error.hpp"

namespace lpi {
namespace {

constexpr std::size_t kMaxCodeOrder = 11;

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

void require_code_order(std::size_t n) {
  if (n == 0 || n > kMaxCodeOrder) {
    throw InvalidArgument("adjacency codes support 1 <= n <= " + std::to_string(kMaxCodeOrder));
  }
}

// Branch and bound over relabellings. Fixing the vertex that receives new
// label j fixes column j of the code, so prefixes can be compared as the
// permutation grows. Two unplaced vertices with the same neighbourhood
// (apart from each other) are interchangeable; only the first is tried.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()), bits_(pair_count(n_)), adj_(n_, 0) {
    for (Vertex v = 0; v < n_; ++v) {
      g.neighbors(v).for_each([&](Vertex w) { adj_[v] |= 1U << w; });
    }
    perm_.assign(n_, 0);
  }

  std::uint64_t run() {
    if (n_ == 1) return 0;
    search(0, 0, 0, false);
    return best_;
  }

  const std::vector<Vertex>& best_perm() const { return best_perm_; }

 private:
  void search(std::size_t j, std::uint32_t placed, std::uint64_t prefix, bool below) {
    if (j == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    std::uint32_t tried = 0;
    for (Vertex c = 0; c < n_; ++c) {
      const std::uint32_t bit = 1U << c;
      if ((placed & bit) != 0) continue;
      bool twin = false;
      for (auto t = tried; t != 0 && !twin; t &= t - 1) {
        const auto c2 = static_cast<Vertex>(std::countr_zero(t));
        twin = (adj_[c] & ~(1U << c2)) == (adj_[c2] & ~bit);
      }
      if (twin) continue;
      tried |= bit;

      std::uint64_t column = prefix;
      for (std::size_t i = 0; i < j; ++i) column = (column << 1) | ((adj_[perm_[i]] >> c) & 1U);
      bool next_below = below;
      if (have_best_ && !below) {
        const std::size_t used_bits = pair_count(j + 1);
        const std::uint64_t best_prefix = best_ >> (bits_ - used_bits);
        if (column > best_prefix) continue;
        next_below = column < best_prefix;
      }
      perm_[j] = c;
      search(j + 1, placed | bit, column, next_below);
    }
  }

  std::size_t n_;
  std::size_t bits_;
  std::vector<std::uint32_t> adj_;
  std::vector<Vertex> perm_;
  std::vector<Vertex> best_perm_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  require_code_order(g.order());
  std::uint64_t code = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1U : 0U);
  return code;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  require_code_order(n);
  std::vector<Edge> edges;
  std::size_t k = pair_count(n);
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      --k;
      if (((code >> k) & 1U) != 0) edges.push_back({i, j});
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::uint64_t canonical_code(const Graph& g) {
  require_code_order(g.order());
  return Canonizer(g).run();
}

Graph canonical_form(const Graph& g) {
  return graph_from_code(g.order(), canonical_code(g));
}

std::vector<Graph> generate_connected_graphs(std::size_t n) {
  if (n < 1 || n > kMaxGeneratedOrder) {
    throw InvalidArgument("generate_connected_graphs supports 1 <= n <= " +
                          std::to_string(kMaxGeneratedOrder));
  }
  std::vector<Graph> layer{Graph::from_edge_list(1, {})};
  // Every connected graph has a vertex whose removal leaves it connected, so
  // each class on k vertices arises from some class on k-1 plus a new vertex.
  for (std::size_t k = 2; k <= n; ++k) {
    std::set<std::uint64_t> codes;
    const auto last = static_cast<Vertex>(k - 1);
    for (const auto& base : layer) {
      const auto base_edges = base.edges();
      for (std::uint32_t subset = 1; subset < (1U << (k - 1)); ++subset) {
        auto edges = base_edges;
        for (Vertex v = 0; v < last; ++v)
          if (((subset >> v) & 1U) != 0) edges.push_back({v, last});
        codes.insert(canonical_code(Graph::from_edge_list(k, edges)));
      }
    }
    layer.clear();
    for (auto code : codes) layer.push_back(graph_from_code(k, code));
  }
  return layer;
}

std::vector<Graph> generate_connected_graphs_up_to(std::size_t n) {
  std::vector<Graph> out;
  for (std::size_t k = 1; k <= n; ++k) {
    auto layer = generate_connected_graphs(k);
    std::move(layer.begin(), layer.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace lpi
