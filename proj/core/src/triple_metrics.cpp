#include "lpi/triple_metrics.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "lpi/error.hpp"

namespace lpi {
namespace {

void require_index(std::size_t which) {
  if (which > 2) throw InvalidArgument("triple index " + std::to_string(which) + " not in 0..2");
}

std::array<std::size_t, 2> others(std::size_t which) {
  switch (which) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

}  // namespace

PathTriple::PathTriple(const Graph& g, Path p0, Path p1, Path p2)
    : universe_(g.order()), paths_{std::move(p0), std::move(p1), std::move(p2)} {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!paths_[i].is_valid_in(g)) {
      throw InvalidArgument("triple member " + paths_[i].to_string() + " is not a path of the graph");
    }
    sets_[i] = paths_[i].vertex_set(universe_);
  }
  if (paths_[0] == paths_[1] || paths_[0] == paths_[2] || paths_[1] == paths_[2]) {
    throw InvalidArgument("triple members must be pairwise distinct");
  }
}

std::size_t TripleAnalysis::min_crossings() const {
  return *std::min_element(crossing_counts.begin(), crossing_counts.end());
}

std::size_t TripleAnalysis::exclusive_total() const {
  return exclusive_sizes[0] + exclusive_sizes[1] + exclusive_sizes[2];
}

std::size_t distance_sum(const Graph& g, Vertex v, const PathTriple& triple) {
  if (v >= g.order()) throw InvalidArgument("vertex out of range");
  std::size_t sum = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto d = distances_from_set(g, triple.vertex_set(i))[v];
    if (!d) throw InvalidArgument("vertex " + std::to_string(v) + " cannot reach " + triple[i].to_string());
    sum += *d;
  }
  return sum;
}

FValue f_value_from_distances(const DistanceVector& d0, const DistanceVector& d1,
                              const DistanceVector& d2) {
  const std::size_t n = d0.size();
  FValue result{std::numeric_limits<std::size_t>::max(), VertexSet(n)};
  for (Vertex v = 0; v < n; ++v) {
    if (!d0[v] || !d1[v] || !d2[v]) {
      throw InvalidArgument("f is undefined on a disconnected graph");
    }
    const std::size_t sum = std::size_t{*d0[v]} + *d1[v] + *d2[v];
    if (sum < result.f) {
      result.f = sum;
      result.witnesses = VertexSet(n);
    }
    if (sum == result.f) result.witnesses.insert(v);
  }
  return result;
}

FValue f_value(const Graph& g, const PathTriple& triple) {
  if (triple.universe() != g.order()) throw InvalidArgument("triple belongs to another graph");
  return f_value_from_distances(distances_from_set(g, triple.vertex_set(0)),
                                distances_from_set(g, triple.vertex_set(1)),
                                distances_from_set(g, triple.vertex_set(2)));
}

VertexSet exclusive_vertices(const PathTriple& triple, std::size_t which) {
  require_index(which);
  const auto [a, b] = others(which);
  return triple.vertex_set(which) - triple.vertex_set(a) - triple.vertex_set(b);
}

std::size_t t_count(const PathTriple& triple, std::size_t which, CrossingConvention convention) {
  require_index(which);
  const auto [a, b] = others(which);
  const auto& on_a = triple.vertex_set(a);
  const auto& on_b = triple.vertex_set(b);
  const auto vs = triple[which].vertices();
  const std::size_t len = vs.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t hits_a = 0;
    std::size_t hits_b = 0;
    for (std::size_t j = i; j < len; ++j) {
      hits_a += on_a.contains(vs[j]) ? 1 : 0;
      hits_b += on_b.contains(vs[j]) ? 1 : 0;
      if (hits_a > 1 || hits_b > 1) break;
      if (hits_a != 1 || hits_b != 1) continue;
      if (i == j && convention == CrossingConvention::kStrict) continue;
      // The single hit on each side must sit at opposite ends of the segment.
      const bool forward = on_a.contains(vs[i]) && on_b.contains(vs[j]);
      const bool backward = on_b.contains(vs[i]) && on_a.contains(vs[j]);
      if (forward || backward) ++count;
    }
  }
  return count;
}

VertexSet pairwise_intersection(const PathTriple& triple, std::size_t i, std::size_t j) {
  require_index(i);
  require_index(j);
  if (i == j) throw InvalidArgument("pairwise_intersection needs two different indices");
  return triple.vertex_set(i) & triple.vertex_set(j);
}

namespace {

TripleAnalysis fill_structure(const PathTriple& triple, FValue fv, CrossingConvention convention) {
  TripleAnalysis out;
  out.f = fv.f;
  out.witnesses = std::move(fv.witnesses);
  for (std::size_t i = 0; i < 3; ++i) {
    out.exclusive_sizes[i] = exclusive_vertices(triple, i).size();
    out.crossing_counts[i] = t_count(triple, i, convention);
  }
  out.pairwise = {pairwise_intersection(triple, 0, 1), pairwise_intersection(triple, 0, 2),
                  pairwise_intersection(triple, 1, 2)};
  out.common = out.pairwise[0] & triple.vertex_set(2);
  return out;
}

}  // namespace

TripleAnalysis analyze_triple(const Graph& g, const PathTriple& triple, CrossingConvention convention) {
  return fill_structure(triple, f_value(g, triple), convention);
}

TripleAnalysis analyze_triple(const PathTriple& triple,
                              const std::array<const DistanceVector*, 3>& distances,
                              CrossingConvention convention) {
  return fill_structure(
      triple, f_value_from_distances(*distances[0], *distances[1], *distances[2]), convention);
}

}  // namespace lpi
