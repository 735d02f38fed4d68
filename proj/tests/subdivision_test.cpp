#include <random>

#include <gtest/gtest.h>

#include "lpi/error.hpp"
#include "lpi/generate.hpp"
#include "lpi/path_search.hpp"
#include "lpi/subdivision.hpp"
#include "test_graphs.hpp"

namespace lpi {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::path_graph;
using testing::spider_222;
using testing::star_graph;

PathTriple claw_triple() {
  const auto g = star_graph(3);
  return PathTriple(g, Path({1, 0, 2}), Path({1, 0, 3}), Path({2, 0, 3}));
}

TEST(Subdivide, Spider) {
  const auto s = subdivide(spider_222(), 1);
  EXPECT_EQ(s.graph.order(), 13u);
  EXPECT_EQ(s.graph.size(), 12u);
  const auto lifted = lift_path(s, Path({2, 1, 0, 3, 4}));
  EXPECT_EQ(lifted.order(), 9u);
  EXPECT_TRUE(lifted.is_valid_in(s.graph));
  EXPECT_EQ(longest_path_length(s.graph), 8u);
}

TEST(Subdivide, ZeroIsIdentity) {
  const auto g = spider_222();
  const auto s = subdivide(g, 0);
  EXPECT_EQ(s.graph, g);
  EXPECT_EQ(lift_path(s, Path({2, 1, 0})), Path({2, 1, 0}));
}

TEST(Subdivide, EdgeBecomesPath) {
  const auto s = subdivide(path_graph(2), 2);
  EXPECT_EQ(s.graph, Graph::from_edge_list(4, {{0, 2}, {2, 3}, {3, 1}}));
  EXPECT_EQ(s.interior(0, 1, 1), 2u);
  EXPECT_EQ(s.interior(1, 0, 1), 3u);
  EXPECT_EQ(s.interior(0, 1, 2), 3u);
  EXPECT_EQ(s.origin(3).kind, Provenance::kSubdivision);
  EXPECT_EQ(s.origin(3).position, 2u);
  EXPECT_EQ(s.origin(0).kind, Provenance::kOriginal);
  EXPECT_THROW(s.interior(0, 1, 3), InvalidArgument);
}

TEST(Subdivide, CountIdentities) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 40; ++rep) {
    const auto g = testing::random_connected_graph(3 + rep % 6, 0.4, rng);
    for (std::size_t t : {0u, 1u, 2u, 3u}) {
      const auto s = subdivide(g, t);
      EXPECT_EQ(s.graph.order(), g.order() + t * g.size());
      EXPECT_EQ(s.graph.size(), (t + 1) * g.size());
      const auto d = testing::all_pairs_distances(g);
      const auto ds = testing::all_pairs_distances(s.graph);
      for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(ds[u][v], static_cast<int>(t + 1) * d[u][v]);
      for (Vertex v = static_cast<Vertex>(g.order()); v < s.graph.order(); ++v) {
        const auto o = s.origin(v);
        EXPECT_EQ(o.kind, Provenance::kSubdivision);
        EXPECT_EQ(s.interior(o.edge.u, o.edge.v, o.position), v);
      }
    }
  }
}

TEST(Subdivide, LiftedFScales) {
  const auto g = Graph::from_edge_list(
      9, {{0, 1}, {2, 3}, {4, 5}, {1, 6}, {3, 7}, {5, 8}, {6, 7}, {7, 8}});
  const PathTriple t(g, Path({0, 1}), Path({2, 3}), Path({4, 5}));
  EXPECT_EQ(f_value(g, t).f, 5u);
  for (std::size_t k : {1u, 2u, 3u}) {
    const auto s = subdivide(g, k);
    const PathTriple lifted(s.graph, lift_path(s, t[0]), lift_path(s, t[1]), lift_path(s, t[2]));
    const auto fv = f_value(s.graph, lifted);
    EXPECT_EQ(fv.f, 5u * (k + 1));
    EXPECT_TRUE(fv.witnesses.contains(7));
  }
}

TEST(Pendants, ClawGetsThree) {
  const auto ext = attach_pendants(star_graph(3), claw_triple());
  EXPECT_EQ(ext.graph.order(), 7u);
  EXPECT_EQ(ext.pendants, (std::vector<std::pair<Vertex, Vertex>>{{1, 4}, {2, 5}, {3, 6}}));
  EXPECT_EQ(ext.pendant_of(2), 5u);
  EXPECT_EQ(ext.triple[0], Path({4, 1, 0, 2, 5}));
  for (const auto& p : ext.triple.paths()) EXPECT_TRUE(p.is_valid_in(ext.graph));
}

TEST(Pendants, SharedEndsGetTwo) {
  const auto g = complete_graph(5);
  const PathTriple t(g, Path({0, 1, 2, 3, 4}), Path({0, 2, 1, 3, 4}), Path({0, 3, 2, 1, 4}));
  const auto ext = attach_pendants(g, t);
  EXPECT_EQ(ext.pendants.size(), 2u);
  EXPECT_EQ(ext.graph.order(), 7u);
}

TEST(Pendants, DistinctEndsGetSix) {
  const auto g = cycle_graph(6);
  const PathTriple t(g, Path({1, 2, 3, 4, 5, 0}), Path({3, 4, 5, 0, 1, 2}), Path({5, 0, 1, 2, 3, 4}));
  const auto ext = attach_pendants(g, t);
  EXPECT_EQ(ext.pendants.size(), 6u);
  EXPECT_EQ(ext.graph.size(), 12u);
}

TEST(Pendants, RejectSingleVertexPath) {
  const auto g = path_graph(3);
  const PathTriple t(g, Path({0}), Path({1}), Path({0, 1}));
  EXPECT_THROW(attach_pendants(g, t), InvalidArgument);
}

TEST(Instance, ClawLengths) {
  for (std::size_t t : {1u, 2u}) {
    const auto inst = build_subdivided_instance(star_graph(3), claw_triple(), t);
    EXPECT_EQ(inst.t(), t);
    for (const auto& p : inst.lifted.paths()) {
      EXPECT_EQ(p.length(), 4 * (t + 1));
      EXPECT_TRUE(p.is_valid_in(inst.result()));
    }
    EXPECT_EQ(longest_path_length(inst.result()), 4 * (t + 1));
    EXPECT_EQ(inst.origin(0).kind, Provenance::kOriginal);
    EXPECT_EQ(inst.origin(4).kind, Provenance::kPendant);
    EXPECT_EQ(inst.origin(7).kind, Provenance::kSubdivision);
  }
}

TEST(Proposition, ClawHolds) {
  LongestPathCache cache;
  for (std::size_t t : {1u, 2u}) {
    const auto r = verify_proposition(star_graph(3), claw_triple(), t, {}, &cache);
    EXPECT_EQ(r.verdict.status, Status::kHolds);
    EXPECT_EQ(r.lifted_length, 4 * (t + 1));
    EXPECT_EQ(r.lifted_longest, (std::array<bool, 3>{true, true, true}));
    EXPECT_TRUE(r.f_scales);
    EXPECT_TRUE(r.original_witness);
    EXPECT_EQ(r.subdivided_order, 7 + 6 * t);
  }
  EXPECT_EQ(cache.size(), 2u);
}

TEST(Proposition, SkipsOversizedInstances) {
  PropositionOptions opts;
  opts.max_order = 10;
  const auto r = verify_proposition(star_graph(3), claw_triple(), 2, opts);
  EXPECT_EQ(r.verdict.status, Status::kSkippedBudget);
}

TEST(Proposition, RequiresLongestPaths) {
  const auto g = path_graph(4);
  const PathTriple t(g, Path({0, 1}), Path({1, 2}), Path({2, 3}));
  EXPECT_THROW(verify_proposition(g, t, 1), InvalidArgument);
}

TEST(SizeBound, Claw) {
  const auto v = check_size_bound(star_graph(3), claw_triple(), 1);
  EXPECT_EQ(v.status, Status::kHolds);
  EXPECT_EQ(v.witness.number("n0"), 4);
  EXPECT_EQ(v.witness.number("edges"), 3);
  EXPECT_EQ(v.witness.number("edge_limit"), 9);
  EXPECT_EQ(v.witness.number("subdivided_order"), 13);
  EXPECT_EQ(v.witness.number("order_limit"), 25);
}

TEST(Restrict, DropsUnusedVerticesAndEdges) {
  // K4 with a pendant; the triple avoids the pendant and one chord.
  const auto g = Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  const PathTriple t(g, Path({0, 1, 2}), Path({1, 2, 3}), Path({0, 1, 3}));
  const auto r = restrict_to_triple(g, t);
  EXPECT_EQ(r.graph.order(), 4u);
  EXPECT_EQ(r.graph.size(), 4u);  // 01, 12, 23, 13
  EXPECT_EQ(r.original, (std::vector<Vertex>{0, 1, 2, 3}));
  for (const auto& p : r.triple.paths()) EXPECT_TRUE(p.is_valid_in(r.graph));
}

}  // namespace
}  // namespace lpi
