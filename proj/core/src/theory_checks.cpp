#include "lpi/theory_checks.hpp"

#include <algorithm>
#include <string>

namespace lpi {
namespace {

struct ClaimInfo {
  ClaimId id;
  std::string_view name;
  ClaimKind kind;
};

constexpr std::array<ClaimInfo, kAllClaims.size()> kClaimTable = {{
    {ClaimId::kProp1, "prop1", ClaimKind::kProven},
    {ClaimId::kConjectureZ, "conj_Z", ClaimKind::kConjecture},
    {ClaimId::kLemma21, "lemma21", ClaimKind::kProven},
    {ClaimId::kLemma22, "lemma22", ClaimKind::kProven},
    {ClaimId::kLemma23, "lemma23", ClaimKind::kProven},
    {ClaimId::kTheorem1, "thm1", ClaimKind::kProven},
    {ClaimId::kCase1Bound, "case1_bound", ClaimKind::kProven},
    {ClaimId::kCase2Bound, "case2_bound", ClaimKind::kProven},
    {ClaimId::kLengthBound, "length_bound", ClaimKind::kProven},
    {ClaimId::kConjecture4, "conj4", ClaimKind::kConjecture},
    {ClaimId::kGallaiVertex, "gallai_vertex", ClaimKind::kInformational},
    {ClaimId::kHypotraceable, "hypotraceable", ClaimKind::kInformational},
    {ClaimId::kSubdivisionProposition, "subdivision_prop", ClaimKind::kProven},
    {ClaimId::kSizeBound, "size_bound", ClaimKind::kProven},
}};

const ClaimInfo& info(ClaimId id) {
  return kClaimTable[static_cast<std::size_t>(id)];
}

Status holds_if(bool ok) { return ok ? Status::kHolds : Status::kViolated; }

using I64 = std::int64_t;

I64 as_i64(std::size_t x) { return static_cast<I64>(x); }

// Everything needed to replay a triple verdict.
Witness triple_witness(const TripleEvaluation& e) {
  const auto& a = e.analysis;
  Witness w;
  w.graph = e.context->encoded();
  w.paths.assign(e.triple.paths().begin(), e.triple.paths().end());
  w.vertices = a.witnesses.to_vector();
  w.numbers = {
      {"n", as_i64(e.context->graph().order())},
      {"l", as_i64(e.context->longest_length())},
      {"f", as_i64(a.f)},
      {"x0", as_i64(a.exclusive_sizes[0])},
      {"x1", as_i64(a.exclusive_sizes[1])},
      {"x2", as_i64(a.exclusive_sizes[2])},
      {"t0", as_i64(a.crossing_counts[0])},
      {"t1", as_i64(a.crossing_counts[1])},
      {"t2", as_i64(a.crossing_counts[2])},
  };
  return w;
}

// Triple verdicts carry the full replay witness only when violated.
ClaimVerdict triple_verdict(ClaimId id, Status status, const TripleEvaluation& e) {
  ClaimVerdict v{id, status, {}};
  if (status == Status::kViolated) v.witness = triple_witness(e);
  return v;
}

bool some_crossing_equals(const TripleAnalysis& a, std::size_t t) {
  return std::find(a.crossing_counts.begin(), a.crossing_counts.end(), t) != a.crossing_counts.end();
}

}  // namespace

std::string_view claim_name(ClaimId id) { return info(id).name; }

ClaimKind claim_kind(ClaimId id) { return info(id).kind; }

std::optional<ClaimId> claim_from_name(std::string_view name) {
  for (const auto& c : kClaimTable)
    if (c.name == name) return c.id;
  return std::nullopt;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kHolds: return "holds";
    case Status::kViolated: return "violated";
    case Status::kVacuous: return "vacuous";
    case Status::kSkippedTruncated: return "skipped_truncated";
    case Status::kSkippedBudget: return "skipped_budget";
  }
  return "unknown";
}

std::string encode_graph(const Graph& g) {
  return g.order() <= kMaxGraph6Order ? to_graph6(g) : to_edge_list(g);
}

std::optional<std::int64_t> Witness::number(std::string_view key) const {
  for (const auto& [k, v] : numbers)
    if (k == key) return v;
  return std::nullopt;
}

GraphContext::GraphContext(Graph g, std::size_t cap, const Deadline& deadline)
    : graph_(std::move(g)) {
  if (!is_connected(graph_)) throw InvalidArgument("theory checks require a connected graph");
  longest_ = enumerate_longest_paths(graph_, cap, deadline);
  encoded_ = encode_graph(graph_);
}

TripleEvaluation evaluate_triple(const GraphContext& ctx, PathTriple triple,
                                 CrossingConvention convention) {
  for (const auto& p : triple.paths()) {
    if (!ctx.is_longest(p)) throw InvalidArgument(p.to_string() + " is not a longest path");
  }
  auto analysis = analyze_triple(ctx.graph(), triple, convention);
  return {&ctx, std::move(triple), std::move(analysis)};
}

TripleEvaluation evaluate_triple(const GraphContext& ctx, PathTriple triple,
                                 const std::array<const DistanceVector*, 3>& distances,
                                 CrossingConvention convention) {
  for (const auto& p : triple.paths()) {
    if (!ctx.is_longest(p)) throw InvalidArgument(p.to_string() + " is not a longest path");
  }
  auto analysis = analyze_triple(triple, distances, convention);
  return {&ctx, std::move(triple), std::move(analysis)};
}

namespace bounds {
bool lemma21(I64 n, I64 l, I64 exclusive_total) { return 2 * n >= 3 * l + exclusive_total + 3; }
bool lemma22(I64 exclusive, I64 crossings, I64 f) { return exclusive >= crossings * (f - 1); }
bool theorem1(I64 n, I64 f) { return 13 * f <= n + 6; }
bool case1(I64 n, I64 f) { return 26 * f <= 2 * n + 9; }
bool case2(I64 n, I64 f) { return 27 * f <= 2 * n + 12; }
bool length(I64 l, I64 f) { return l >= 6 * f - 2; }
I64 union_edge_limit(I64 n0) { return 3 * (n0 - 1); }
I64 subdivided_order_limit(I64 n0, I64 t) { return n0 + 3 * (n0 + 1) * t + 6; }
}  // namespace bounds

ClaimVerdict check_prop1(const GraphContext& ctx, const Path& p1, const Path& p2) {
  if (!ctx.is_longest(p1) || !ctx.is_longest(p2)) {
    throw InvalidArgument("check_prop1: both paths must be longest paths");
  }
  if (p1 == p2) throw InvalidArgument("check_prop1: paths must be distinct");
  const auto n = ctx.graph().order();
  const auto common = p1.vertex_set(n) & p2.vertex_set(n);
  Witness w;
  w.graph = ctx.encoded();
  w.paths = {p1, p2};
  w.vertices = common.to_vector();
  return {ClaimId::kProp1, holds_if(!common.empty()), std::move(w)};
}

ClaimVerdict check_conjecture_z(const TripleEvaluation& e) {
  return triple_verdict(ClaimId::kConjectureZ, holds_if(e.analysis.f == 0), e);
}

ClaimVerdict check_lemma21(const TripleEvaluation& e) {
  if (e.analysis.f == 0) return triple_verdict(ClaimId::kLemma21, Status::kVacuous, e);
  const bool ok = bounds::lemma21(as_i64(e.context->graph().order()),
                                  as_i64(e.context->longest_length()),
                                  as_i64(e.analysis.exclusive_total()));
  return triple_verdict(ClaimId::kLemma21, holds_if(ok), e);
}

ClaimVerdict check_lemma22(const TripleEvaluation& e) {
  const auto& a = e.analysis;
  bool ok = true;
  for (std::size_t i = 0; i < 3; ++i) {
    ok = ok && bounds::lemma22(as_i64(a.exclusive_sizes[i]), as_i64(a.crossing_counts[i]), as_i64(a.f));
  }
  return triple_verdict(ClaimId::kLemma22, holds_if(ok), e);
}

ClaimVerdict check_lemma23(const TripleEvaluation& e) {
  if (!some_crossing_equals(e.analysis, 1)) return triple_verdict(ClaimId::kLemma23, Status::kVacuous, e);
  return triple_verdict(ClaimId::kLemma23, holds_if(e.analysis.f == 0), e);
}

ClaimVerdict check_theorem1(const TripleEvaluation& e) {
  const bool ok = bounds::theorem1(as_i64(e.context->graph().order()), as_i64(e.analysis.f));
  return triple_verdict(ClaimId::kTheorem1, holds_if(ok), e);
}

std::array<ClaimVerdict, 2> check_case_bounds(const TripleEvaluation& e) {
  const auto n = as_i64(e.context->graph().order());
  const auto f = as_i64(e.analysis.f);
  const auto t_min = e.analysis.min_crossings();
  const auto case1 = t_min == 2 ? holds_if(bounds::case1(n, f)) : Status::kVacuous;
  const auto case2 = t_min >= 3 ? holds_if(bounds::case2(n, f)) : Status::kVacuous;
  return {triple_verdict(ClaimId::kCase1Bound, case1, e), triple_verdict(ClaimId::kCase2Bound, case2, e)};
}

ClaimVerdict check_length_bound(const TripleEvaluation& e) {
  if (e.analysis.f == 0 || e.analysis.min_crossings() < 2) {
    return triple_verdict(ClaimId::kLengthBound, Status::kVacuous, e);
  }
  const bool ok = bounds::length(as_i64(e.context->longest_length()), as_i64(e.analysis.f));
  return triple_verdict(ClaimId::kLengthBound, holds_if(ok), e);
}

ClaimVerdict check_conjecture4(const TripleEvaluation& e) {
  if (!some_crossing_equals(e.analysis, 2)) {
    return triple_verdict(ClaimId::kConjecture4, Status::kVacuous, e);
  }
  return triple_verdict(ClaimId::kConjecture4, holds_if(e.analysis.f == 0), e);
}

std::vector<ClaimVerdict> check_triple_claims(const TripleEvaluation& e) {
  auto cases = check_case_bounds(e);
  std::vector<ClaimVerdict> out;
  out.reserve(8);
  out.push_back(check_conjecture_z(e));
  out.push_back(check_lemma21(e));
  out.push_back(check_lemma22(e));
  out.push_back(check_lemma23(e));
  out.push_back(check_theorem1(e));
  out.push_back(std::move(cases[0]));
  out.push_back(std::move(cases[1]));
  out.push_back(check_length_bound(e));
  out.push_back(check_conjecture4(e));
  return out;
}

VertexSet gallai_vertex_set(const GraphContext& ctx) {
  if (ctx.truncated()) throw InvalidArgument("gallai_vertex_set: longest-path enumeration was truncated");
  const auto n = ctx.graph().order();
  auto common = VertexSet::full(n);
  for (const auto& p : ctx.longest().paths) common &= p.vertex_set(n);
  return common;
}

ClaimVerdict check_gallai_vertex(const GraphContext& ctx) {
  Witness w;
  w.graph = ctx.encoded();
  if (ctx.truncated()) return {ClaimId::kGallaiVertex, Status::kSkippedTruncated, std::move(w)};
  const auto common = gallai_vertex_set(ctx);
  w.vertices = common.to_vector();
  w.numbers = {{"longest_paths", as_i64(ctx.longest().paths.size())}};
  return {ClaimId::kGallaiVertex, holds_if(!common.empty()), std::move(w)};
}

bool is_hypotraceable(const Graph& g, std::chrono::milliseconds budget) {
  const auto n = g.order();
  if (n > kMaxHypotraceableOrder) {
    throw BudgetExceeded("is_hypotraceable: order " + std::to_string(n) + " exceeds supported " +
                         std::to_string(kMaxHypotraceableOrder));
  }
  const auto deadline = Deadline::after(budget);
  if (n == 1 || has_hamiltonian_path(g, deadline)) return false;
  for (Vertex v = 0; v < n; ++v) {
    deadline.check("is_hypotraceable");
    auto rest = VertexSet::full(n);
    rest.erase(v);
    if (!has_hamiltonian_path(induced_subgraph(g, rest), deadline)) return false;
  }
  return true;
}

}  // namespace lpi
