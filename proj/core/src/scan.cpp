#include "lpi/scan.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "lpi/error.hpp"
#include "lpi/generate.hpp"

namespace lpi {
namespace {

constexpr std::array kTripleClaims = {
    ClaimId::kConjectureZ, ClaimId::kLemma21,    ClaimId::kLemma22,
    ClaimId::kLemma23,     ClaimId::kTheorem1,   ClaimId::kCase1Bound,
    ClaimId::kCase2Bound,  ClaimId::kLengthBound, ClaimId::kConjecture4,
};

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
std::uint64_t choose3(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) / 2 * (n - 2) / 3; }

ClaimTally& tally_of(ClaimTallies& t, ClaimId id) { return t[static_cast<std::size_t>(id)]; }

template <class Fn>
std::uint64_t for_each_pair(std::size_t count, std::uint64_t limit, Fn&& fn) {
  std::uint64_t done = 0;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) {
      if (done == limit) return done;
      fn(i, j);
      ++done;
    }
  return done;
}

template <class Fn>
std::uint64_t for_each_triple(std::size_t count, std::uint64_t limit, Fn&& fn) {
  std::uint64_t done = 0;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      for (std::size_t k = j + 1; k < count; ++k) {
        if (done == limit) return done;
        fn(i, j, k);
        ++done;
      }
  return done;
}

void record_verdict(GraphRecord& r, ClaimVerdict v) {
  tally_of(r.tallies, v.claim).add(v.status);
  if (v.status == Status::kViolated && claim_kind(v.claim) != ClaimKind::kInformational) {
    r.violations.push_back(std::move(v));
  }
}

// Lazily built multi-source distance vector per longest path.
class PathDistances {
 public:
  explicit PathDistances(const GraphContext& ctx) : ctx_(ctx), cache_(ctx.longest().paths.size()) {}

  const DistanceVector* get(std::size_t index) {
    auto& slot = cache_[index];
    if (!slot) {
      const auto& p = ctx_.longest().paths[index];
      slot = distances_from_set(ctx_.graph(), p.vertex_set(ctx_.graph().order()));
    }
    return &*slot;
  }

 private:
  const GraphContext& ctx_;
  std::vector<std::optional<DistanceVector>> cache_;
};

}  // namespace

std::set<ClaimId> default_scan_claims() {
  std::set<ClaimId> out(kAllClaims.begin(), kAllClaims.end());
  out.erase(ClaimId::kHypotraceable);
  return out;
}

void ClaimTally::add(Status s, std::uint64_t count) {
  switch (s) {
    case Status::kHolds: holds += count; break;
    case Status::kViolated: violated += count; break;
    case Status::kVacuous: vacuous += count; break;
    case Status::kSkippedTruncated: skipped_truncated += count; break;
    case Status::kSkippedBudget: skipped_budget += count; break;
  }
}

ClaimTally& ClaimTally::operator+=(const ClaimTally& o) {
  holds += o.holds;
  violated += o.violated;
  vacuous += o.vacuous;
  skipped_truncated += o.skipped_truncated;
  skipped_budget += o.skipped_budget;
  implied += o.implied;
  return *this;
}

std::string_view graph_status_name(GraphStatus s) {
  switch (s) {
    case GraphStatus::kAnalyzed: return "analyzed";
    case GraphStatus::kShortcut: return "shortcut";
    case GraphStatus::kVacuous: return "vacuous";
    case GraphStatus::kTruncated: return "truncated";
    case GraphStatus::kDisconnected: return "disconnected";
  }
  return "unknown";
}

GraphRecord scan_graph(const Graph& g, const ScanOptions& options) {
  GraphRecord r;
  r.id = encode_graph(g);
  r.n = g.order();
  r.m = g.size();
  if (!is_connected(g)) {
    r.status = GraphStatus::kDisconnected;
    return r;
  }
  auto enabled = [&](ClaimId id) { return options.checks.contains(id); };

  const GraphContext ctx(g, options.path_cap);
  const auto& paths = ctx.longest().paths;
  r.longest_length = ctx.longest_length();
  r.longest_count = paths.size();
  if (ctx.truncated()) {
    r.status = GraphStatus::kTruncated;
    for (auto id : options.checks) tally_of(r.tallies, id).add(Status::kSkippedTruncated);
    return r;
  }

  const auto gallai = gallai_vertex_set(ctx);
  r.gallai_size = gallai.size();
  if (enabled(ClaimId::kGallaiVertex)) record_verdict(r, check_gallai_vertex(ctx));
  if (enabled(ClaimId::kHypotraceable)) {
    try {
      const bool hypo = is_hypotraceable(g);
      record_verdict(r, {ClaimId::kHypotraceable, hypo ? Status::kHolds : Status::kViolated, {}});
    } catch (const BudgetExceeded&) {
      tally_of(r.tallies, ClaimId::kHypotraceable).add(Status::kSkippedBudget);
    }
  }

  const bool shortcut_available = options.triple_mode == TripleMode::kShortcutFirst && !gallai.empty();
  auto limit_for = [&](std::uint64_t total) {
    return options.triple_mode == TripleMode::kAll ? total : std::min(total, options.triple_cap);
  };

  r.pairs_total = choose2(paths.size());
  if (enabled(ClaimId::kProp1) && r.pairs_total > 0) {
    if (shortcut_available && r.pairs_total > options.exhaustive_below) {
      r.pairs_implied = r.pairs_total;
      tally_of(r.tallies, ClaimId::kProp1).implied += r.pairs_total;
    } else {
      r.pairs_examined = for_each_pair(paths.size(), limit_for(r.pairs_total), [&](auto i, auto j) {
        record_verdict(r, check_prop1(ctx, paths[i], paths[j]));
      });
      r.pairs_skipped = r.pairs_total - r.pairs_examined;
    }
  }

  r.triples_total = choose3(paths.size());
  if (r.triples_total == 0) {
    r.status = GraphStatus::kVacuous;
    for (auto id : kTripleClaims)
      if (enabled(id)) tally_of(r.tallies, id).add(Status::kVacuous);
    return r;
  }

  if (shortcut_available && r.triples_total > options.exhaustive_below) {
    // A vertex on every longest path puts f = 0 for every triple.
    r.status = GraphStatus::kShortcut;
    r.triples_implied = r.triples_total;
    for (auto id : kTripleClaims)
      if (enabled(id)) tally_of(r.tallies, id).implied += r.triples_total;
    r.max_f = 0;
    return r;
  }

  r.status = GraphStatus::kAnalyzed;
  PathDistances distances(ctx);
  LongestPathCache subdivided_cache;
  r.triples_examined = for_each_triple(paths.size(), limit_for(r.triples_total), [&](auto i, auto j, auto k) {
    PathTriple triple(g, paths[i], paths[j], paths[k]);
    auto e = evaluate_triple(ctx, std::move(triple), {distances.get(i), distances.get(j), distances.get(k)},
                             options.convention);
    r.max_f = std::max(r.max_f.value_or(0), e.analysis.f);
    r.min_t = std::min(r.min_t.value_or(e.analysis.min_crossings()), e.analysis.min_crossings());
    for (auto& v : check_triple_claims(e))
      if (enabled(v.claim)) record_verdict(r, std::move(v));
    for (auto t : options.subdivision_t) {
      if (enabled(ClaimId::kSubdivisionProposition)) {
        record_verdict(r, verify_proposition(g, e.triple, t, options.proposition, &subdivided_cache).verdict);
      }
      if (enabled(ClaimId::kSizeBound)) record_verdict(r, check_size_bound(g, e.triple, t));
    }
  });
  r.triples_skipped = r.triples_total - r.triples_examined;
  return r;
}

void finalize_report(ScanReport& report) {
  std::stable_sort(report.graphs.begin(), report.graphs.end(),
                   [](const GraphRecord& a, const GraphRecord& b) { return a.id < b.id; });
  ScanSummary s;
  report.counterexamples.clear();
  for (const auto& r : report.graphs) {
    ++s.graphs;
    switch (r.status) {
      case GraphStatus::kAnalyzed: ++s.analyzed; break;
      case GraphStatus::kShortcut: ++s.shortcut; break;
      case GraphStatus::kVacuous: ++s.vacuous; break;
      case GraphStatus::kTruncated: ++s.truncated; break;
      case GraphStatus::kDisconnected: ++s.disconnected; break;
    }
    s.triples_examined += r.triples_examined;
    s.triples_implied += r.triples_implied;
    s.triples_skipped += r.triples_skipped;
    for (std::size_t i = 0; i < s.tallies.size(); ++i) s.tallies[i] += r.tallies[i];
    if (r.max_f) s.max_f = std::max(s.max_f.value_or(0), *r.max_f);
    if (r.min_t) s.min_t = std::min(s.min_t.value_or(*r.min_t), *r.min_t);
    for (const auto& v : r.violations) {
      (claim_kind(v.claim) == ClaimKind::kProven ? s.proven_violations : s.conjecture_violations) += 1;
      report.counterexamples.push_back({r.id, v});
    }
  }
  report.summary = std::move(s);
}

ScanReport scan_graphs(const std::vector<Graph>& corpus, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ScanReport report;
  report.options = options;

  std::vector<std::optional<GraphRecord>> slots(corpus.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      auto record = scan_graph(corpus[i], options);
      const bool proven_violation = std::any_of(record.violations.begin(), record.violations.end(), [](auto& v) {
        return claim_kind(v.claim) == ClaimKind::kProven;
      });
      slots[i] = std::move(record);
      if (proven_violation && options.stop_on_proven_violation) stop.store(true);
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, corpus.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  for (auto& slot : slots) {
    if (slot) {
      report.graphs.push_back(std::move(*slot));
    } else {
      report.aborted = true;
    }
  }
  finalize_report(report);
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<Graph> load_corpus(const ScanSource& source) {
  if (source.kind == ScanSource::Kind::kGenerate) {
    return generate_connected_graphs_up_to(source.max_order);
  }
  if (source.path == "-") return read_graphs(std::cin, source.format);
  std::ifstream in(source.path);
  if (!in) throw Error("cannot open input file '" + source.path + "'");
  return read_graphs(in, source.format);
}

ScanReport scan(const ScanConfig& config) {
  auto corpus = load_corpus(config.source);
  auto report = scan_graphs(corpus, config.options);
  report.source_description = config.source.kind == ScanSource::Kind::kGenerate
                                  ? "generated connected graphs, n <= " + std::to_string(config.source.max_order)
                                  : "file " + config.source.path;
  return report;
}

int exit_code(const ScanReport& report) {
  bool conjecture = false;
  for (const auto& c : report.counterexamples) {
    switch (claim_kind(c.verdict.claim)) {
      case ClaimKind::kProven: return kExitProvenViolation;
      case ClaimKind::kConjecture: conjecture = true; break;
      case ClaimKind::kInformational: break;
    }
  }
  return conjecture ? kExitConjectureViolation : kExitOk;
}

AnalysisRecord analyze_one(const Graph& g, const AnalyzeOptions& options) {
  AnalysisRecord a;
  a.id = encode_graph(g);
  a.n = g.order();
  a.m = g.size();
  a.convention = options.convention;
  a.connected = is_connected(g);
  if (!a.connected) return a;

  const GraphContext ctx(g, options.path_cap);
  a.longest = ctx.longest();
  if (!ctx.truncated()) a.gallai = gallai_vertex_set(ctx);
  if (options.hypotraceable) {
    try {
      a.hypotraceable = is_hypotraceable(g, options.hypotraceable_budget);
    } catch (const BudgetExceeded&) {
      a.hypotraceable.reset();
    }
  }

  const auto& paths = a.longest.paths;
  for_each_pair(paths.size(), options.triple_cap, [&](auto i, auto j) {
    auto v = check_prop1(ctx, paths[i], paths[j]);
    a.prop1.add(v.status);
    if (v.status == Status::kViolated) a.pair_violations.push_back(std::move(v));
  });

  a.triples_total = choose3(paths.size());
  LongestPathCache cache;
  for_each_triple(paths.size(), options.triple_cap, [&](auto i, auto j, auto k) {
    auto e = evaluate_triple(ctx, PathTriple(g, paths[i], paths[j], paths[k]), options.convention);
    TripleRecord t;
    t.indices = {i, j, k};
    t.verdicts = check_triple_claims(e);
    for (auto s : options.subdivision_t) {
      t.propositions.push_back(verify_proposition(g, e.triple, s, options.proposition, &cache));
      t.size_bounds.push_back(check_size_bound(g, e.triple, s));
    }
    t.analysis = std::move(e.analysis);
    a.triples.push_back(std::move(t));
  });
  return a;
}

}  // namespace lpi
