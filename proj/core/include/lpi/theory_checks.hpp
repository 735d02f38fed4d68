#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpi/error.hpp"
#include "lpi/graph.hpp"
#include "lpi/path.hpp"
#include "lpi/path_search.hpp"
#include "lpi/triple_metrics.hpp"

namespace lpi {

enum class ClaimId : std::uint8_t {
  kProp1,          // two longest paths meet
  kConjectureZ,    // three longest paths meet (f = 0)
  kLemma21,        // f > 0  =>  2n >= 3l + sum|X| + 3
  kLemma22,        // |X(P)| >= t(P)(f-1)
  kLemma23,        // some t(P) = 1  =>  f = 0
  kTheorem1,       // 13f <= n + 6
  kCase1Bound,     // t_min = 2  =>  26f <= 2n + 9
  kCase2Bound,     // t_min >= 3  =>  27f <= 2n + 12
  kLengthBound,    // f >= 1 and t_min >= 2  =>  l >= 6f - 2 (intermediate step toward thm1)
  kConjecture4,    // some t(P) = 2  =>  f = 0
  kGallaiVertex,   // every longest path shares a vertex (informational)
  kHypotraceable,  // informational
  kSubdivisionProposition,
  kSizeBound,
};

inline constexpr std::array kAllClaims = {
    ClaimId::kProp1,       ClaimId::kConjectureZ,  ClaimId::kLemma21,
    ClaimId::kLemma22,     ClaimId::kLemma23,      ClaimId::kTheorem1,
    ClaimId::kCase1Bound,  ClaimId::kCase2Bound,   ClaimId::kLengthBound,
    ClaimId::kConjecture4, ClaimId::kGallaiVertex, ClaimId::kHypotraceable,
    ClaimId::kSubdivisionProposition, ClaimId::kSizeBound,
};

enum class ClaimKind {
  kProven,         // a violation means a bug in this library
  kConjecture,     // a violation would be a counterexample
  kInformational,  // a property, not a claim; never counted as a violation
};

enum class Status { kHolds, kViolated, kVacuous, kSkippedTruncated, kSkippedBudget };

std::string_view claim_name(ClaimId id);
std::optional<ClaimId> claim_from_name(std::string_view name);
ClaimKind claim_kind(ClaimId id);
std::string_view status_name(Status s);

/// graph6 when n <= 62, edge-list text otherwise.
std::string encode_graph(const Graph& g);

struct Witness {
  std::string graph;
  std::vector<Path> paths;
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::string, std::int64_t>> numbers;

  std::optional<std::int64_t> number(std::string_view key) const;
};

struct ClaimVerdict {
  ClaimId claim;
  Status status;
  Witness witness;
};

/// A connected graph together with its longest-path data, computed once.
class GraphContext {
 public:
  explicit GraphContext(Graph g, std::size_t cap = kDefaultPathCap, const Deadline& deadline = {});

  const Graph& graph() const { return graph_; }
  const LongestPathSet& longest() const { return longest_; }
  std::size_t longest_length() const { return longest_.length; }
  bool truncated() const { return longest_.truncated; }
  const std::string& encoded() const { return encoded_; }

  bool is_longest(const Path& p) const {
    return p.order() == longest_.length + 1 && p.is_valid_in(graph_);
  }

 private:
  Graph graph_;
  LongestPathSet longest_;
  std::string encoded_;
};

/// A longest-path triple with its metrics.
struct TripleEvaluation {
  const GraphContext* context;
  PathTriple triple;
  TripleAnalysis analysis;
};

/// Throws InvalidArgument if a member is not a longest path of the context graph.
TripleEvaluation evaluate_triple(const GraphContext& ctx, PathTriple triple,
                                 CrossingConvention convention = CrossingConvention::kIncludeSingleVertex);

/// Same, reusing per-path distance vectors.
TripleEvaluation evaluate_triple(const GraphContext& ctx, PathTriple triple,
                                 const std::array<const DistanceVector*, 3>& distances,
                                 CrossingConvention convention = CrossingConvention::kIncludeSingleVertex);

/// Exact integer forms of each inequality; all quantities cross-multiplied.
namespace bounds {
bool lemma21(std::int64_t n, std::int64_t l, std::int64_t exclusive_total);
bool lemma22(std::int64_t exclusive, std::int64_t crossings, std::int64_t f);
bool theorem1(std::int64_t n, std::int64_t f);
bool case1(std::int64_t n, std::int64_t f);
bool case2(std::int64_t n, std::int64_t f);
bool length(std::int64_t l, std::int64_t f);
std::int64_t union_edge_limit(std::int64_t n0);
std::int64_t subdivided_order_limit(std::int64_t n0, std::int64_t t);
}  // namespace bounds

ClaimVerdict check_prop1(const GraphContext& ctx, const Path& p1, const Path& p2);
ClaimVerdict check_conjecture_z(const TripleEvaluation& e);
ClaimVerdict check_lemma21(const TripleEvaluation& e);
ClaimVerdict check_lemma22(const TripleEvaluation& e);
ClaimVerdict check_lemma23(const TripleEvaluation& e);
ClaimVerdict check_theorem1(const TripleEvaluation& e);
/// {case1_bound, case2_bound}; at most one is non-vacuous.
std::array<ClaimVerdict, 2> check_case_bounds(const TripleEvaluation& e);
ClaimVerdict check_length_bound(const TripleEvaluation& e);
ClaimVerdict check_conjecture4(const TripleEvaluation& e);

/// Every triple-level claim in `ClaimId` order.
std::vector<ClaimVerdict> check_triple_claims(const TripleEvaluation& e);

/// Intersection of all longest paths. Throws if the enumeration was truncated.
VertexSet gallai_vertex_set(const GraphContext& ctx);
ClaimVerdict check_gallai_vertex(const GraphContext& ctx);

inline constexpr std::size_t kMaxHypotraceableOrder = 34;
inline constexpr std::chrono::milliseconds kHypotraceableBudget{60'000};

/// No Hamiltonian path, but every vertex-deleted subgraph has one. Throws
/// BudgetExceeded above kMaxHypotraceableOrder or when `budget` runs out.
bool is_hypotraceable(const Graph& g, std::chrono::milliseconds budget = kHypotraceableBudget);

}  // namespace lpi
