#include <random>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "lpi/error.hpp"
#include "lpi/generate.hpp"
#include "lpi/graph.hpp"
#include "test_graphs.hpp"

namespace lpi {
namespace {

using testing::all_pairs_distances;
using testing::cycle_graph;
using testing::path_graph;
using testing::star_graph;

// Reference encoder: list the upper-triangle bits column by column, pad to a
// multiple of six, then map each 6-bit group to a printable byte.
std::string reference_graph6(const Graph& g) {
  std::vector<int> bits;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  std::string s(1, static_cast<char>(63 + g.order()));
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = 2 * v + bits[k + b];
    s.push_back(static_cast<char>(63 + v));
  }
  return s;
}

TEST(FromEdgeList, BuildsPath) {
  auto g = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(FromEdgeList, SingleVertex) {
  auto g = Graph::from_edge_list(1, {});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.size(), 0u);
}

TEST(FromEdgeList, CollapsesDuplicates) {
  auto g = Graph::from_edge_list(4, {{0, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(FromEdgeList, RejectsBadInput) {
  EXPECT_THROW(Graph::from_edge_list(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(Graph::from_edge_list(3, {{1, 1}}), InvalidArgument);
  EXPECT_THROW(Graph::from_edge_list(0, {}), InvalidArgument);
}

TEST(Graph6, HandEncodedVectors) {
  EXPECT_EQ(parse_graph6("Bg"), path_graph(3));
  EXPECT_EQ(parse_graph6("B?"), Graph::from_edge_list(3, {}));
  EXPECT_EQ(parse_graph6("A_"), Graph::from_edge_list(2, {{0, 1}}));
  EXPECT_EQ(to_graph6(path_graph(3)), "Bg");
  EXPECT_EQ(to_graph6(Graph::from_edge_list(3, {})), "B?");
  EXPECT_EQ(to_graph6(Graph::from_edge_list(2, {{0, 1}})), "A_");
  EXPECT_EQ(to_graph6(Graph::from_edge_list(1, {})), "@");
  EXPECT_EQ(parse_graph6("@"), Graph::from_edge_list(1, {}));
}

TEST(Graph6, MatchesReferenceEncoder) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1, 2, 5, 11, 12, 13, 40, 62}) {
    for (int rep = 0; rep < 5; ++rep) {
      auto g = testing::random_graph(n, 0.4, rng);
      EXPECT_EQ(to_graph6(g), reference_graph6(g)) << "n=" << n;
    }
  }
}

TEST(Graph6, RoundTripOnGeneratedCorpus) {
  for (const auto& g : generate_connected_graphs_up_to(7)) {
    const auto s = to_graph6(g);
    EXPECT_EQ(parse_graph6(s), g);
    EXPECT_EQ(to_graph6(parse_graph6(s)), s);
  }
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("?"), ParseError);      // n = 0
  EXPECT_THROW(parse_graph6("~?~"), ParseError);    // extended header
  EXPECT_THROW(parse_graph6("Bgg"), ParseError);    // too many bytes
  EXPECT_THROW(parse_graph6("C"), ParseError);      // too few bytes
  EXPECT_THROW(parse_graph6("B "), ParseError);     // byte below 63
  EXPECT_THROW(parse_graph6("B@"), ParseError);     // nonzero padding bit
  EXPECT_THROW(to_graph6(path_graph(63)), InvalidArgument);
}

TEST(Graph6, StripsLineTerminators) {
  EXPECT_EQ(parse_graph6("Bg\n"), path_graph(3));
  EXPECT_EQ(parse_graph6("Bg\r\n"), path_graph(3));
}

TEST(EdgeList, ParsesAndPrints) {
  const auto g = parse_edge_list("3 2\n0 1\n1 2\n");
  EXPECT_EQ(g, path_graph(3));
  EXPECT_EQ(to_edge_list(g), "3 2\n0 1\n1 2\n");
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 1\n7"), ParseError);
}

TEST(ReadGraphs, SniffsFormat) {
  std::istringstream g6("Bg\n\nA_\n");
  auto a = read_graphs(g6);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[1], Graph::from_edge_list(2, {{0, 1}}));

  std::istringstream el("3 2\n0 1\n1 2\n2 1\n0 1\n");
  auto b = read_graphs(el);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], path_graph(3));

  std::istringstream bad("Bg\nzz\n");
  EXPECT_THROW(read_graphs(bad), ParseError);
}

TEST(IsConnected, Examples) {
  EXPECT_TRUE(is_connected(path_graph(3)));
  EXPECT_FALSE(is_connected(Graph::from_edge_list(2, {})));
  EXPECT_TRUE(is_connected(star_graph(3)));
  EXPECT_TRUE(is_connected(Graph::from_edge_list(1, {})));
}

std::vector<std::optional<std::uint32_t>> as_vector(const DistanceVector& d) {
  std::vector<std::optional<std::uint32_t>> out;
  for (Vertex v = 0; v < d.size(); ++v) out.push_back(d[v]);
  return out;
}

TEST(DistancesFromSet, Examples) {
  using D = std::vector<std::optional<std::uint32_t>>;
  const auto c5 = cycle_graph(5);
  EXPECT_EQ(as_vector(distances_from_set(c5, VertexSet::of(5, {0}))), (D{0, 1, 2, 2, 1}));
  EXPECT_EQ(as_vector(distances_from_set(c5, VertexSet::of(5, {0, 2}))), (D{0, 1, 0, 1, 1}));
  const auto two = Graph::from_edge_list(2, {});
  EXPECT_EQ(as_vector(distances_from_set(two, VertexSet::of(2, {0}))), (D{0, std::nullopt}));
  EXPECT_THROW(distances_from_set(c5, VertexSet(5)), InvalidArgument);
}

// Properties over random graphs n <= 7 against Floyd-Warshall.
TEST(DistancesFromSet, AgreesWithAllPairsAndSetMinimum) {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 1 + rep % 7;
    const auto g = testing::random_graph(n, 0.35, rng);
    const auto d = all_pairs_distances(g);
    for (Vertex s = 0; s < n; ++s) {
      const auto single = distances_from_set(g, VertexSet::of(n, {s}));
      for (Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(single[v].has_value(), d[s][v] >= 0);
        if (single[v]) EXPECT_EQ(static_cast<int>(*single[v]), d[s][v]);
      }
    }
    VertexSet sources(n);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    for (int k = 0; k < 3; ++k) sources.insert(pick(rng));
    const auto multi = distances_from_set(g, sources);
    for (Vertex v = 0; v < n; ++v) {
      int best = -1;
      sources.for_each([&](Vertex s) {
        if (d[s][v] >= 0 && (best < 0 || d[s][v] < best)) best = d[s][v];
      });
      EXPECT_EQ(multi[v].has_value(), best >= 0);
      if (multi[v]) EXPECT_EQ(static_cast<int>(*multi[v]), best);
      EXPECT_EQ(multi[v] == 0u, sources.contains(v));
      // BFS layering: neighbours differ by at most one.
      g.neighbors(v).for_each([&](Vertex w) {
        if (multi[v] && multi[w]) EXPECT_LE(std::abs(static_cast<int>(*multi[v]) - static_cast<int>(*multi[w])), 1);
      });
    }
  }
}

TEST(DistancesFromSet, TriangleInequalityOnCorpus) {
  for (const auto& g : generate_connected_graphs_up_to(6)) {
    const auto n = g.order();
    std::vector<DistanceVector> rows;
    for (Vertex s = 0; s < n; ++s) rows.push_back(distances_from_set(g, VertexSet::of(n, {s})));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        for (Vertex w = 0; w < n; ++w) ASSERT_LE(*rows[u][w], *rows[u][v] + *rows[v][w]);
  }
}

TEST(VertexSet, Operations) {
  auto a = VertexSet::of(70, {0, 3, 65});
  auto b = VertexSet::of(70, {3, 69});
  EXPECT_EQ((a & b).to_vector(), (std::vector<Vertex>{3}));
  EXPECT_EQ((a | b).size(), 4u);
  EXPECT_EQ((a - b).to_vector(), (std::vector<Vertex>{0, 65}));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE((a - b).intersects(b));
  EXPECT_EQ(VertexSet::full(70).size(), 70u);
  EXPECT_THROW(a.insert(70), InvalidArgument);
  EXPECT_THROW((void)(a & VertexSet(3)), InvalidArgument);
}

}  // namespace
}  // namespace lpi
