#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lpi/graph.hpp"
#include "lpi/path.hpp"
#include "lpi/path_search.hpp"
#include "lpi/theory_checks.hpp"
#include "lpi/triple_metrics.hpp"

namespace lpi {

/// G plus one new leaf at each distinct end-vertex of the triple's paths.
/// Pendant ids follow the base vertices, assigned in increasing order of the
/// end-vertex they hang from.
struct PendantExtension {
  Graph graph;
  std::size_t base_order;
  std::vector<std::pair<Vertex, Vertex>> pendants;  // (end-vertex, pendant)
  PathTriple triple;                                // each path with a pendant at both ends

  Vertex pendant_of(Vertex end) const;
};

/// Throws InvalidArgument if a path has a single vertex.
PendantExtension attach_pendants(const Graph& g, const PathTriple& triple);

enum class Provenance { kOriginal, kPendant, kSubdivision };

struct VertexOrigin {
  Provenance kind = Provenance::kOriginal;
  Edge edge{};                // subdivided edge of the input graph (u < v)
  std::size_t position = 0;   // 1..t counted from edge.u
};

/// Every edge replaced by a path with t interior vertices. Input vertices
/// keep their ids; interior vertices follow in (sorted edge, position) order.
struct SubdividedGraph {
  Graph graph;
  std::size_t t;
  std::size_t base_order;
  std::vector<Edge> base_edges;

  Vertex interior(Vertex from, Vertex to, std::size_t step) const;
  VertexOrigin origin(Vertex v) const;
};

SubdividedGraph subdivide(const Graph& g, std::size_t t);

/// Image of a path of the input graph in its subdivision.
Path lift_path(const SubdividedGraph& s, const Path& p);

struct SubdividedInstance {
  Graph base;
  PathTriple base_triple;
  PendantExtension extended;
  SubdividedGraph subdivided;
  PathTriple lifted;

  std::size_t t() const { return subdivided.t; }
  const Graph& result() const { return subdivided.graph; }
  VertexOrigin origin(Vertex v) const;
};

SubdividedInstance build_subdivided_instance(const Graph& g, const PathTriple& triple, std::size_t t);

/// Memoised longest-path enumerations keyed by graph. Not thread-safe.
class LongestPathCache {
 public:
  const LongestPathSet& get(const Graph& g, std::size_t cap, const Deadline& deadline);
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<Graph, LongestPathSet, GraphHash> entries_;
};

struct PropositionOptions {
  std::size_t max_order = 60;
  std::chrono::milliseconds budget{120'000};
  std::size_t cap = kDefaultPathCap;
};

struct PropositionReport {
  ClaimVerdict verdict{ClaimId::kSubdivisionProposition, Status::kHolds, {}};
  std::size_t t = 0;
  std::size_t subdivided_order = 0;
  std::size_t base_f = 0;
  std::size_t lifted_f = 0;
  std::size_t lifted_length = 0;  // l(G^t)
  std::array<bool, 3> lifted_longest{};
  bool f_scales = false;           // f(G^t, P^t) == (t+1) f(G, P)
  bool original_witness = false;   // some minimiser on G^t is a vertex of G
};

/// Brute-force check that the lifted paths are longest in G^t and that f
/// scales by t+1. Base paths must be longest paths of g.
PropositionReport verify_proposition(const Graph& g, const PathTriple& triple, std::size_t t,
                                     const PropositionOptions& options = {},
                                     LongestPathCache* cache = nullptr);

/// Subgraph formed by the vertices and edges of the three paths.
struct RestrictedInstance {
  Graph graph;
  std::vector<Vertex> original;  // new id -> id in the input graph
  PathTriple triple;
};

RestrictedInstance restrict_to_triple(const Graph& g, const PathTriple& triple);

/// Restricts to the triple, builds G^t on the result, and checks
/// |E(H)| <= 3(n0-1) and |V(G^t)| <= n0 + 3(n0+1)t + 6.
ClaimVerdict check_size_bound(const Graph& g, const PathTriple& triple, std::size_t t);

}  // namespace lpi
