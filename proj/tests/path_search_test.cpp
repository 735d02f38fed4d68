#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "lpi/error.hpp"
#include "lpi/generate.hpp"
#include "lpi/path_search.hpp"
#include "test_graphs.hpp"

namespace lpi {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::path_graph;
using testing::petersen_graph;
using testing::star_graph;

std::vector<Path> longest_by_oracle(const Graph& g) {
  auto all = enumerate_all_simple_paths_oracle(g);
  std::size_t best = 0;
  for (const auto& p : all) best = std::max(best, p.length());
  std::vector<Path> out;
  for (const auto& p : all)
    if (p.length() == best) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Path, CanonicalOrientation) {
  Path a({3, 1, 2});
  Path b({2, 1, 3});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.front(), 2u);
  EXPECT_EQ(a.to_string(), "[2,1,3]");
  EXPECT_EQ(a.length(), 2u);
  EXPECT_THROW(Path({}), InvalidArgument);
  EXPECT_THROW(Path({1, 2, 1}), InvalidArgument);
  EXPECT_THROW(Path::in(path_graph(3), {0, 2}), InvalidArgument);
}

TEST(Path, Subpath) {
  Path p({0, 1, 2, 3, 4});
  EXPECT_EQ(subpath(p, 3, 1), Path({1, 2, 3}));
  EXPECT_EQ(subpath(p, 2, 2), Path({2}));
}

TEST(OracleCounts, SmallGraphs) {
  EXPECT_EQ(enumerate_all_simple_paths_oracle(path_graph(3)).size(), 6u);
  EXPECT_EQ(enumerate_all_simple_paths_oracle(path_graph(2)).size(), 3u);
  EXPECT_EQ(enumerate_all_simple_paths_oracle(complete_graph(3)).size(), 9u);
  EXPECT_EQ(enumerate_all_simple_paths_oracle(path_graph(1)).size(), 1u);
}

TEST(LongestPaths, Claw) {
  const auto r = enumerate_longest_paths(star_graph(3));
  EXPECT_EQ(r.length, 2u);
  EXPECT_FALSE(r.truncated);
  EXPECT_EQ(r.paths, (std::vector<Path>{Path({1, 0, 2}), Path({1, 0, 3}), Path({2, 0, 3})}));
}

TEST(LongestPaths, Cycle5) {
  const auto r = enumerate_longest_paths(cycle_graph(5));
  EXPECT_EQ(r.length, 4u);
  EXPECT_EQ(r.paths.size(), 5u);
}

TEST(LongestPaths, SingleVertexAndEdge) {
  const auto one = enumerate_longest_paths(path_graph(1));
  EXPECT_EQ(one.length, 0u);
  EXPECT_EQ(one.paths, (std::vector<Path>{Path({0})}));
  const auto two = enumerate_longest_paths(path_graph(2));
  EXPECT_EQ(two.paths, (std::vector<Path>{Path({0, 1})}));
}

TEST(LongestPaths, PetersenAgreesWithOracle) {
  const auto g = petersen_graph();
  const auto r = enumerate_longest_paths(g);
  EXPECT_EQ(r.length, 9u);
  EXPECT_EQ(r.paths, longest_by_oracle(g));
  EXPECT_TRUE(has_hamiltonian_path(g));
}

TEST(LongestPaths, CompleteGraphCount) {
  // K_n has n!/2 Hamiltonian paths.
  const auto r = enumerate_longest_paths(complete_graph(6));
  EXPECT_EQ(r.length, 5u);
  EXPECT_EQ(r.paths.size(), 360u);
}

TEST(LongestPaths, CapKeepsSmallestPrefix) {
  const auto g = complete_graph(6);
  const auto full = enumerate_longest_paths(g);
  const auto capped = enumerate_longest_paths(g, 17);
  EXPECT_TRUE(capped.truncated);
  ASSERT_EQ(capped.paths.size(), 17u);
  EXPECT_TRUE(std::equal(capped.paths.begin(), capped.paths.end(), full.paths.begin()));
  EXPECT_FALSE(enumerate_longest_paths(g, 360).truncated);
  EXPECT_THROW(enumerate_longest_paths(g, 0), InvalidArgument);
}

TEST(LongestPaths, DisconnectedUsesLargestComponent) {
  const auto g = Graph::from_edge_list(6, {{0, 1}, {2, 3}, {3, 4}, {4, 5}});
  EXPECT_EQ(longest_path_length(g), 3u);
  EXPECT_EQ(enumerate_longest_paths(g).paths, (std::vector<Path>{Path({2, 3, 4, 5})}));
}

TEST(LongestPaths, OracleEquivalenceOnCorpus) {
  for (const auto& g : generate_connected_graphs_up_to(6)) {
    const auto r = enumerate_longest_paths(g);
    ASSERT_EQ(r.paths, longest_by_oracle(g)) << to_graph6(g);
    ASSERT_EQ(longest_path_length(g), r.length);
  }
}

TEST(LongestPaths, RandomGraphsAgreeWithOracle) {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 150; ++rep) {
    const std::size_t n = 2 + rep % 8;
    const auto g = testing::random_graph(n, 0.3 + 0.05 * (rep % 5), rng);
    const auto r = enumerate_longest_paths(g);
    ASSERT_EQ(r.paths, longest_by_oracle(g)) << to_graph6(g);
    for (const auto& p : r.paths) EXPECT_TRUE(p.is_valid_in(g));
  }
}

// Adding an edge never shortens the longest path; any subpath of a longest
// path is a path of the graph.
TEST(LongestPaths, Properties) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 3 + rep % 7;
    const auto g = testing::random_connected_graph(n, 0.25, rng);
    const auto l = longest_path_length(g);
    auto edges = g.edges();
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    if (a != b) edges.push_back({a, b});
    EXPECT_GE(longest_path_length(Graph::from_edge_list(n, edges)), l);
    for (const auto& p : enumerate_longest_paths(g).paths) {
      const auto vs = p.vertices();
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i; j < vs.size(); ++j) EXPECT_TRUE(subpath(p, vs[i], vs[j]).is_valid_in(g));
    }
  }
}

TEST(Hamiltonian, DpAgreesWithSearch) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 1 + rep % 12;
    const auto g = testing::random_graph(n, 0.3, rng);
    const bool expected = longest_path_length(g) + 1 == n;
    EXPECT_EQ(has_hamiltonian_path_dp(g), expected) << to_graph6(g);
    EXPECT_EQ(has_hamiltonian_path(g), expected) << to_graph6(g);
  }
}

TEST(Hamiltonian, KnownGraphs) {
  EXPECT_FALSE(has_hamiltonian_path(star_graph(3)));
  EXPECT_TRUE(has_hamiltonian_path(cycle_graph(30)));
  EXPECT_TRUE(has_hamiltonian_path(path_graph(1)));
  EXPECT_FALSE(has_hamiltonian_path(Graph::from_edge_list(2, {})));
}

TEST(Deadline, ExpiredDeadlineThrows) {
  const auto d = Deadline::after(std::chrono::milliseconds(0));
  EXPECT_THROW(enumerate_longest_paths(complete_graph(11), kDefaultPathCap, d), BudgetExceeded);
}

}  // namespace
}  // namespace lpi
