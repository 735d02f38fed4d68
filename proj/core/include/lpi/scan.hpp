#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lpi/graph.hpp"
#include "lpi/path_search.hpp"
#include "lpi/subdivision.hpp"
#include "lpi/theory_checks.hpp"
#include "lpi/triple_metrics.hpp"

namespace lpi {

enum class TripleMode {
  kShortcutFirst,  // skip triple iteration when all longest paths share a vertex
  kAll,            // evaluate every triple
  kCapped,         // evaluate the first triple_cap triples in canonical order
};

/// Claims evaluated by `--checks all`. hypotraceable is opt-in and the
/// subdivision claims only run when t values are given.
std::set<ClaimId> default_scan_claims();

struct ScanOptions {
  std::set<ClaimId> checks = default_scan_claims();
  TripleMode triple_mode = TripleMode::kShortcutFirst;
  std::uint64_t triple_cap = 1'000'000;
  /// Under kShortcutFirst, graphs with at most this many triples (or pairs)
  /// are still evaluated in full.
  std::uint64_t exhaustive_below = 200'000;
  std::size_t path_cap = kDefaultPathCap;
  std::vector<std::size_t> subdivision_t;
  PropositionOptions proposition;
  CrossingConvention convention = CrossingConvention::kIncludeSingleVertex;
  std::size_t jobs = 1;
  bool stop_on_proven_violation = true;
};

struct ScanSource {
  enum class Kind { kGenerate, kFile };
  Kind kind = Kind::kGenerate;
  std::size_t max_order = 7;  // kGenerate: all connected graphs on 1..max_order vertices
  std::string path;           // kFile; "-" reads standard input
  InputFormat format = InputFormat::kAuto;
};

struct ScanConfig {
  ScanSource source;
  ScanOptions options;
};

struct ClaimTally {
  std::uint64_t holds = 0;
  std::uint64_t violated = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t skipped_truncated = 0;
  std::uint64_t skipped_budget = 0;
  std::uint64_t implied = 0;  // settled by the shared-vertex shortcut without evaluation

  void add(Status s, std::uint64_t count = 1);
  ClaimTally& operator+=(const ClaimTally& other);
  bool operator==(const ClaimTally&) const = default;
};

using ClaimTallies = std::array<ClaimTally, kAllClaims.size()>;

enum class GraphStatus { kAnalyzed, kShortcut, kVacuous, kTruncated, kDisconnected };

std::string_view graph_status_name(GraphStatus s);

struct GraphRecord {
  std::string id;  // graph6, or edge-list text above 62 vertices
  std::size_t n = 0;
  std::size_t m = 0;
  GraphStatus status = GraphStatus::kAnalyzed;
  std::size_t longest_length = 0;
  std::size_t longest_count = 0;
  std::optional<std::size_t> gallai_size;
  std::uint64_t pairs_total = 0;
  std::uint64_t pairs_examined = 0;
  std::uint64_t pairs_implied = 0;
  std::uint64_t pairs_skipped = 0;
  std::uint64_t triples_total = 0;
  std::uint64_t triples_examined = 0;
  std::uint64_t triples_implied = 0;
  std::uint64_t triples_skipped = 0;
  ClaimTallies tallies{};
  std::optional<std::size_t> max_f;
  std::optional<std::size_t> min_t;
  std::vector<ClaimVerdict> violations;
};

struct Counterexample {
  std::string graph;
  ClaimVerdict verdict;
};

struct ScanSummary {
  std::uint64_t graphs = 0;  // records in the report
  std::uint64_t analyzed = 0;
  std::uint64_t shortcut = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t truncated = 0;
  std::uint64_t disconnected = 0;
  std::uint64_t proven_violations = 0;
  std::uint64_t conjecture_violations = 0;
  std::uint64_t triples_examined = 0;
  std::uint64_t triples_implied = 0;
  std::uint64_t triples_skipped = 0;
  ClaimTallies tallies{};
  std::optional<std::size_t> max_f;
  std::optional<std::size_t> min_t;
};

struct ScanReport {
  ScanOptions options;
  std::string source_description;
  std::vector<GraphRecord> graphs;  // sorted by id
  std::vector<Counterexample> counterexamples;
  ScanSummary summary;
  bool aborted = false;
  std::chrono::duration<double> wall_time{};
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConjectureViolation = 2;
inline constexpr int kExitProvenViolation = 3;
inline constexpr int kExitConfigError = 4;

int exit_code(const ScanReport& report);

std::vector<Graph> load_corpus(const ScanSource& source);

/// Evaluates one graph under `options` (single-threaded).
GraphRecord scan_graph(const Graph& g, const ScanOptions& options);

ScanReport scan_graphs(const std::vector<Graph>& corpus, const ScanOptions& options);
ScanReport scan(const ScanConfig& config);

/// Recomputes the summary and counterexample list from the records.
void finalize_report(ScanReport& report);

// Single-graph deep dive.

struct AnalyzeOptions {
  std::size_t path_cap = kDefaultPathCap;
  std::uint64_t triple_cap = 1'000;
  std::vector<std::size_t> subdivision_t;
  PropositionOptions proposition;
  CrossingConvention convention = CrossingConvention::kIncludeSingleVertex;
  bool hypotraceable = true;
  std::chrono::milliseconds hypotraceable_budget = kHypotraceableBudget;
};

struct TripleRecord {
  std::array<std::size_t, 3> indices{};  // into AnalysisRecord::longest.paths
  TripleAnalysis analysis;
  std::vector<ClaimVerdict> verdicts;
  std::vector<PropositionReport> propositions;
  std::vector<ClaimVerdict> size_bounds;
};

struct AnalysisRecord {
  std::string id;
  std::size_t n = 0;
  std::size_t m = 0;
  bool connected = false;
  CrossingConvention convention = CrossingConvention::kIncludeSingleVertex;
  LongestPathSet longest;
  std::optional<VertexSet> gallai;
  std::optional<bool> hypotraceable;  // nullopt when over budget or not requested
  ClaimTally prop1;
  std::vector<ClaimVerdict> pair_violations;
  std::uint64_t triples_total = 0;
  std::vector<TripleRecord> triples;
};

AnalysisRecord analyze_one(const Graph& g, const AnalyzeOptions& options = {});

}  // namespace lpi
