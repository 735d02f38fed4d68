#include "lpi/subdivision.hpp"

#include <algorithm>
#include <string>

#include "lpi/error.hpp"

namespace lpi {

Vertex PendantExtension::pendant_of(Vertex end) const {
  auto it = std::lower_bound(pendants.begin(), pendants.end(), std::pair<Vertex, Vertex>{end, 0});
  if (it == pendants.end() || it->first != end) {
    throw InvalidArgument("vertex " + std::to_string(end) + " carries no pendant");
  }
  return it->second;
}

PendantExtension attach_pendants(const Graph& g, const PathTriple& triple) {
  std::vector<Vertex> ends;
  for (const auto& p : triple.paths()) {
    if (p.order() < 2) {
      throw InvalidArgument("attach_pendants: path " + p.to_string() + " has a single vertex");
    }
    ends.push_back(p.front());
    ends.push_back(p.back());
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

  const auto n = static_cast<Vertex>(g.order());
  std::vector<std::pair<Vertex, Vertex>> pendants;
  auto edges = g.edges();
  for (std::size_t i = 0; i < ends.size(); ++i) {
    pendants.emplace_back(ends[i], n + static_cast<Vertex>(i));
    edges.push_back({ends[i], n + static_cast<Vertex>(i)});
  }
  auto extended = Graph::from_edge_list(g.order() + ends.size(), edges);

  auto extend = [&](const Path& p) {
    auto pend = [&](Vertex end) {
      return std::find_if(pendants.begin(), pendants.end(), [&](auto& e) { return e.first == end; })->second;
    };
    std::vector<Vertex> vs;
    vs.reserve(p.order() + 2);
    vs.push_back(pend(p.front()));
    vs.insert(vs.end(), p.vertices().begin(), p.vertices().end());
    vs.push_back(pend(p.back()));
    return Path(std::move(vs));
  };
  PathTriple lifted(extended, extend(triple[0]), extend(triple[1]), extend(triple[2]));
  return PendantExtension{std::move(extended), g.order(), std::move(pendants), std::move(lifted)};
}

SubdividedGraph subdivide(const Graph& g, std::size_t t) {
  const auto base_edges = g.edges();
  const std::size_t n = g.order() + base_edges.size() * t;
  std::vector<Edge> edges;
  edges.reserve(base_edges.size() * (t + 1));
  for (std::size_t k = 0; k < base_edges.size(); ++k) {
    Vertex prev = base_edges[k].u;
    for (std::size_t pos = 0; pos < t; ++pos) {
      const auto mid = static_cast<Vertex>(g.order() + k * t + pos);
      edges.push_back({prev, mid});
      prev = mid;
    }
    edges.push_back({prev, base_edges[k].v});
  }
  return SubdividedGraph{Graph::from_edge_list(n, edges), t, g.order(), base_edges};
}

Vertex SubdividedGraph::interior(Vertex from, Vertex to, std::size_t step) const {
  if (step < 1 || step > t) throw InvalidArgument("subdivision step out of range");
  const Edge key{std::min(from, to), std::max(from, to)};
  auto it = std::lower_bound(base_edges.begin(), base_edges.end(), key);
  if (it == base_edges.end() || *it != key) {
    throw InvalidArgument("(" + std::to_string(from) + "," + std::to_string(to) + ") is not an edge");
  }
  const auto k = static_cast<std::size_t>(it - base_edges.begin());
  const std::size_t pos = from < to ? step : t + 1 - step;
  return static_cast<Vertex>(base_order + k * t + pos - 1);
}

VertexOrigin SubdividedGraph::origin(Vertex v) const {
  if (v < base_order) return {};
  const std::size_t offset = v - base_order;
  return {Provenance::kSubdivision, base_edges.at(offset / t), offset % t + 1};
}

Path lift_path(const SubdividedGraph& s, const Path& p) {
  const auto vs = p.vertices();
  std::vector<Vertex> out;
  out.reserve((vs.size() - 1) * (s.t + 1) + 1);
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    out.push_back(vs[i]);
    for (std::size_t step = 1; step <= s.t; ++step) out.push_back(s.interior(vs[i], vs[i + 1], step));
  }
  out.push_back(vs.back());
  return Path(std::move(out));
}

VertexOrigin SubdividedInstance::origin(Vertex v) const {
  if (v < base.order()) return {};
  if (v < extended.graph.order()) return {Provenance::kPendant, {}, 0};
  return subdivided.origin(v);
}

SubdividedInstance build_subdivided_instance(const Graph& g, const PathTriple& triple, std::size_t t) {
  auto extended = attach_pendants(g, triple);
  auto sub = subdivide(extended.graph, t);
  PathTriple lifted(sub.graph, lift_path(sub, extended.triple[0]), lift_path(sub, extended.triple[1]),
                    lift_path(sub, extended.triple[2]));
  return SubdividedInstance{g, triple, std::move(extended), std::move(sub), std::move(lifted)};
}

const LongestPathSet& LongestPathCache::get(const Graph& g, std::size_t cap, const Deadline& deadline) {
  auto it = entries_.find(g);
  if (it == entries_.end()) it = entries_.emplace(g, enumerate_longest_paths(g, cap, deadline)).first;
  return it->second;
}

PropositionReport verify_proposition(const Graph& g, const PathTriple& triple, std::size_t t,
                                     const PropositionOptions& options, LongestPathCache* cache) {
  if (!is_connected(g)) throw InvalidArgument("verify_proposition: graph must be connected");
  const auto l = longest_path_length(g);
  for (const auto& p : triple.paths()) {
    if (p.length() != l) throw InvalidArgument("verify_proposition: " + p.to_string() + " is not a longest path");
  }

  PropositionReport r;
  r.t = t;
  r.base_f = f_value(g, triple).f;
  const auto instance = build_subdivided_instance(g, triple, t);
  r.subdivided_order = instance.result().order();

  auto& w = r.verdict.witness;
  r.verdict.claim = ClaimId::kSubdivisionProposition;
  w.graph = encode_graph(g);
  w.paths.assign(triple.paths().begin(), triple.paths().end());
  w.numbers = {{"t", static_cast<std::int64_t>(t)},
               {"subdivided_order", static_cast<std::int64_t>(r.subdivided_order)},
               {"base_f", static_cast<std::int64_t>(r.base_f)}};

  if (r.subdivided_order > options.max_order) {
    r.verdict.status = Status::kSkippedBudget;
    return r;
  }
  try {
    const auto deadline = Deadline::after(options.budget);
    LongestPathCache local;
    const auto& longest = (cache ? *cache : local).get(instance.result(), options.cap, deadline);
    r.lifted_length = longest.length;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& p = instance.lifted[i];
      const bool listed = longest.truncated || std::binary_search(longest.paths.begin(), longest.paths.end(), p);
      r.lifted_longest[i] = p.length() == longest.length && listed;
    }
    const auto fv = f_value(instance.result(), instance.lifted);
    r.lifted_f = fv.f;
    r.f_scales = fv.f == (t + 1) * r.base_f;
    fv.witnesses.for_each([&](Vertex v) {
      if (instance.origin(v).kind == Provenance::kOriginal) r.original_witness = true;
    });
    w.vertices = fv.witnesses.to_vector();
  } catch (const BudgetExceeded&) {
    r.verdict.status = Status::kSkippedBudget;
    return r;
  }
  w.numbers.push_back({"lifted_f", static_cast<std::int64_t>(r.lifted_f)});
  w.numbers.push_back({"lifted_length", static_cast<std::int64_t>(r.lifted_length)});
  const bool ok = r.lifted_longest[0] && r.lifted_longest[1] && r.lifted_longest[2] && r.f_scales &&
                  r.original_witness;
  r.verdict.status = ok ? Status::kHolds : Status::kViolated;
  return r;
}

RestrictedInstance restrict_to_triple(const Graph& g, const PathTriple& triple) {
  auto keep = triple.vertex_set(0) | triple.vertex_set(1) | triple.vertex_set(2);
  const auto original = keep.to_vector();
  std::vector<Vertex> relabel(g.order(), 0);
  for (std::size_t i = 0; i < original.size(); ++i) relabel[original[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  auto map_path = [&](const Path& p) {
    const auto vs = p.vertices();
    std::vector<Vertex> out;
    out.reserve(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
      out.push_back(relabel[vs[i]]);
      if (i > 0) edges.push_back({relabel[vs[i - 1]], relabel[vs[i]]});
    }
    return Path(std::move(out));
  };
  auto p0 = map_path(triple[0]);
  auto p1 = map_path(triple[1]);
  auto p2 = map_path(triple[2]);
  auto h = Graph::from_edge_list(original.size(), edges);
  PathTriple restricted(h, std::move(p0), std::move(p1), std::move(p2));
  return RestrictedInstance{std::move(h), original, std::move(restricted)};
}

ClaimVerdict check_size_bound(const Graph& g, const PathTriple& triple, std::size_t t) {
  const auto restricted = restrict_to_triple(g, triple);
  const auto n0 = static_cast<std::int64_t>(restricted.graph.order());
  const auto edges = static_cast<std::int64_t>(restricted.graph.size());
  const auto instance = build_subdivided_instance(restricted.graph, restricted.triple, t);
  const auto order = static_cast<std::int64_t>(instance.result().order());
  const auto edge_limit = bounds::union_edge_limit(n0);
  const auto order_limit = bounds::subdivided_order_limit(n0, static_cast<std::int64_t>(t));

  ClaimVerdict v{ClaimId::kSizeBound, Status::kHolds, {}};
  v.status = edges <= edge_limit && order <= order_limit ? Status::kHolds : Status::kViolated;
  v.witness.graph = encode_graph(g);
  v.witness.paths.assign(triple.paths().begin(), triple.paths().end());
  v.witness.numbers = {{"t", static_cast<std::int64_t>(t)},
                       {"n0", n0},
                       {"edges", edges},
                       {"edge_limit", edge_limit},
                       {"subdivided_order", order},
                       {"order_limit", order_limit}};
  return v;
}

}  // namespace lpi
