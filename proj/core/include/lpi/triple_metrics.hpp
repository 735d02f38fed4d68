#pragma once

#include <array>
#include <cstddef>

#include "lpi/graph.hpp"
#include "lpi/path.hpp"
#include "lpi/vertex_set.hpp"

namespace lpi {

/// Three pairwise-distinct paths of one graph. Longest-ness is not required
/// here; theory checks add that requirement where it matters.
class PathTriple {
 public:
  PathTriple(const Graph& g, Path p0, Path p1, Path p2);

  const Path& operator[](std::size_t i) const { return paths_.at(i); }
  const VertexSet& vertex_set(std::size_t i) const { return sets_.at(i); }
  const std::array<Path, 3>& paths() const { return paths_; }
  std::size_t universe() const { return universe_; }

 private:
  std::size_t universe_;
  std::array<Path, 3> paths_;
  std::array<VertexSet, 3> sets_;
};

/// Whether a single-vertex subpath lying on both other paths counts as a crossing.
enum class CrossingConvention {
  kIncludeSingleVertex,  // default: an X-Y path may be one vertex of X ∩ Y
  kStrict,               // only subpaths with at least two vertices
};

struct FValue {
  std::size_t f = 0;
  VertexSet witnesses;  // every vertex attaining the minimum distance sum
};

struct TripleAnalysis {
  std::size_t f = 0;
  VertexSet witnesses;
  std::array<std::size_t, 3> exclusive_sizes{};  // |X(P_i)|
  std::array<std::size_t, 3> crossing_counts{};  // t(P_i)
  std::array<VertexSet, 3> pairwise;             // (0,1), (0,2), (1,2)
  VertexSet common;                              // V(P_0) ∩ V(P_1) ∩ V(P_2)

  std::size_t min_crossings() const;
  std::size_t exclusive_total() const;
};

/// Sum over the triple of d(v, V(P_i)). Throws if some path is unreachable from v.
std::size_t distance_sum(const Graph& g, Vertex v, const PathTriple& triple);

/// Minimum distance sum and its argmin set, from one multi-source BFS per path.
/// Requires a connected graph.
FValue f_value(const Graph& g, const PathTriple& triple);

/// Same minimisation given the three per-path distance vectors.
FValue f_value_from_distances(const DistanceVector& d0, const DistanceVector& d1,
                              const DistanceVector& d2);

/// Vertices of path `which` (0..2) on neither of the other two.
VertexSet exclusive_vertices(const PathTriple& triple, std::size_t which);

/// Number of contiguous subpaths of path `which` that are V(A)-V(B) paths,
/// where A and B are the other two members of the triple.
std::size_t t_count(const PathTriple& triple, std::size_t which,
                    CrossingConvention convention = CrossingConvention::kIncludeSingleVertex);

VertexSet pairwise_intersection(const PathTriple& triple, std::size_t i, std::size_t j);

TripleAnalysis analyze_triple(const Graph& g, const PathTriple& triple,
                              CrossingConvention convention = CrossingConvention::kIncludeSingleVertex);

/// Variant reusing precomputed per-path distance vectors (index-aligned with the triple).
TripleAnalysis analyze_triple(const PathTriple& triple,
                              const std::array<const DistanceVector*, 3>& distances,
                              CrossingConvention convention = CrossingConvention::kIncludeSingleVertex);

}  // namespace lpi
