#include "lpi/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "lpi/error.hpp"

namespace lpi {
namespace {

using Json = nlohmann::ordered_json;

std::string_view mode_name(TripleMode m) {
  switch (m) {
    case TripleMode::kShortcutFirst: return "shortcut-first";
    case TripleMode::kAll: return "all";
    case TripleMode::kCapped: return "capped";
  }
  return "unknown";
}

std::string_view convention_name(CrossingConvention c) {
  return c == CrossingConvention::kStrict ? "strict" : "include-single-vertex";
}

std::string_view kind_name(ClaimKind k) {
  switch (k) {
    case ClaimKind::kProven: return "proven";
    case ClaimKind::kConjecture: return "conjecture";
    case ClaimKind::kInformational: return "informational";
  }
  return "unknown";
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json path_json(const Path& p) { return Json(std::vector<Vertex>(p.vertices().begin(), p.vertices().end())); }

Json witness_json(const Witness& w) {
  Json j = Json::object();
  j["graph"] = w.graph;
  Json paths = Json::array();
  for (const auto& p : w.paths) paths.push_back(path_json(p));
  j["paths"] = std::move(paths);
  j["vertices"] = w.vertices;
  Json numbers = Json::object();
  for (const auto& [k, v] : w.numbers) numbers[k] = v;
  j["numbers"] = std::move(numbers);
  return j;
}

constexpr const char* kProofInternal = "proof-internal check";

Json verdict_json(const ClaimVerdict& v) {
  Json j = Json::object();
  j["claim"] = claim_name(v.claim);
  j["kind"] = kind_name(claim_kind(v.claim));
  j["status"] = status_name(v.status);
  if (v.claim == ClaimId::kLengthBound) j["label"] = kProofInternal;
  j["witness"] = witness_json(v.witness);
  return j;
}

Json tally_json(const ClaimTally& t) {
  Json j = Json::object();
  j["holds"] = t.holds;
  j["violated"] = t.violated;
  j["vacuous"] = t.vacuous;
  j["implied"] = t.implied;
  j["skipped_truncated"] = t.skipped_truncated;
  j["skipped_budget"] = t.skipped_budget;
  return j;
}

Json tallies_json(const ClaimTallies& tallies, const std::set<ClaimId>& checks) {
  Json j = Json::object();
  for (auto id : kAllClaims) {
    if (checks.contains(id)) j[std::string(claim_name(id))] = tally_json(tallies[static_cast<std::size_t>(id)]);
  }
  return j;
}

Json options_json(const ScanOptions& o) {
  Json j = Json::object();
  Json checks = Json::array();
  for (auto id : kAllClaims)
    if (o.checks.contains(id)) checks.push_back(claim_name(id));
  j["checks"] = std::move(checks);
  j["triple_mode"] = mode_name(o.triple_mode);
  j["triple_cap"] = o.triple_cap;
  j["exhaustive_below"] = o.exhaustive_below;
  j["path_cap"] = o.path_cap;
  j["subdivision_t"] = o.subdivision_t;
  j["crossing_convention"] = convention_name(o.convention);
  return j;
}

Json record_json(const GraphRecord& r, const std::set<ClaimId>& checks) {
  Json j = Json::object();
  j["graph"] = r.id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["status"] = graph_status_name(r.status);
  j["longest_length"] = r.longest_length;
  j["longest_count"] = r.longest_count;
  j["gallai_size"] = optional_json(r.gallai_size);
  j["pairs"] = {{"total", r.pairs_total}, {"examined", r.pairs_examined}, {"implied", r.pairs_implied},
                {"skipped", r.pairs_skipped}};
  j["triples"] = {{"total", r.triples_total}, {"examined", r.triples_examined},
                  {"implied", r.triples_implied}, {"skipped", r.triples_skipped}};
  j["max_f"] = optional_json(r.max_f);
  j["min_t"] = optional_json(r.min_t);
  j["claims"] = tallies_json(r.tallies, checks);
  return j;
}

std::string scan_json(const ScanReport& report, bool include_timing) {
  const auto& s = report.summary;
  Json j = Json::object();
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "scan";
  j["source"] = report.source_description;
  j["options"] = options_json(report.options);
  Json summary = Json::object();
  summary["graphs"] = s.graphs;
  summary["analyzed"] = s.analyzed;
  summary["shortcut"] = s.shortcut;
  summary["vacuous"] = s.vacuous;
  summary["truncated"] = s.truncated;
  summary["disconnected"] = s.disconnected;
  summary["proven_violations"] = s.proven_violations;
  summary["conjecture_violations"] = s.conjecture_violations;
  summary["triples_examined"] = s.triples_examined;
  summary["triples_implied"] = s.triples_implied;
  summary["triples_skipped"] = s.triples_skipped;
  summary["max_f"] = optional_json(s.max_f);
  summary["min_t"] = optional_json(s.min_t);
  summary["aborted"] = report.aborted;
  summary["exit_code"] = exit_code(report);
  if (include_timing) summary["wall_seconds"] = report.wall_time.count();
  summary["claims"] = tallies_json(s.tallies, report.options.checks);
  if (report.options.checks.contains(ClaimId::kLengthBound)) summary["labels"] = {{"length_bound", kProofInternal}};
  j["summary"] = std::move(summary);
  Json counterexamples = Json::array();
  for (const auto& c : report.counterexamples) {
    Json cj = verdict_json(c.verdict);
    cj["graph"] = c.graph;
    counterexamples.push_back(std::move(cj));
  }
  j["counterexamples"] = std::move(counterexamples);
  Json graphs = Json::array();
  for (const auto& r : report.graphs) graphs.push_back(record_json(r, report.options.checks));
  j["graphs"] = std::move(graphs);
  return j.dump(2) + "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
std::string csv_optional(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string scan_csv(const ScanReport& report) {
  std::ostringstream out;
  out << "graph,n,m,status,longest_length,longest_count,gallai_size,pairs_total,pairs_examined,"
         "triples_total,triples_examined,triples_implied,triples_skipped,max_f,min_t,holds,violated,"
         "vacuous,implied,skipped\n";
  for (const auto& r : report.graphs) {
    ClaimTally all;
    for (const auto& t : r.tallies) all += t;
    out << csv_field(r.id) << ',' << r.n << ',' << r.m << ',' << graph_status_name(r.status) << ','
        << r.longest_length << ',' << r.longest_count << ',' << csv_optional(r.gallai_size) << ','
        << r.pairs_total << ',' << r.pairs_examined << ',' << r.triples_total << ',' << r.triples_examined
        << ',' << r.triples_implied << ',' << r.triples_skipped << ',' << csv_optional(r.max_f) << ','
        << csv_optional(r.min_t) << ',' << all.holds << ',' << all.violated << ',' << all.vacuous << ','
        << all.implied << ',' << all.skipped_truncated + all.skipped_budget << '\n';
  }
  return out.str();
}

std::string scan_text(const ScanReport& report, bool include_timing) {
  const auto& s = report.summary;
  std::ostringstream out;
  out << "source:      " << report.source_description << '\n'
      << "graphs:      " << s.graphs << " (analyzed " << s.analyzed << ", shortcut " << s.shortcut
      << ", vacuous " << s.vacuous << ", truncated " << s.truncated << ", disconnected " << s.disconnected
      << ")\n"
      << "triples:     " << s.triples_examined << " examined, " << s.triples_implied << " implied, "
      << s.triples_skipped << " skipped\n"
      << "max f:       " << csv_optional(s.max_f) << '\n'
      << "min t:       " << csv_optional(s.min_t) << '\n'
      << "violations:  " << s.proven_violations << " proven, " << s.conjecture_violations << " conjecture\n";
  if (report.aborted) out << "ABORTED after a proven-statement violation\n";
  if (include_timing) out << "wall time:   " << std::fixed << std::setprecision(2) << report.wall_time.count() << " s\n";
  out << '\n' << std::left << std::setw(18) << "claim" << std::right;
  for (const char* h : {"holds", "violated", "vacuous", "implied", "skipped"}) out << std::setw(12) << h;
  out << '\n';
  for (auto id : kAllClaims) {
    if (!report.options.checks.contains(id)) continue;
    const auto& t = s.tallies[static_cast<std::size_t>(id)];
    out << std::left << std::setw(18) << claim_name(id) << std::right << std::setw(12) << t.holds
        << std::setw(12) << t.violated << std::setw(12) << t.vacuous << std::setw(12) << t.implied
        << std::setw(12) << t.skipped_truncated + t.skipped_budget
        << (id == ClaimId::kLengthBound ? "  (" + std::string(kProofInternal) + ")" : std::string()) << '\n';
  }
  for (const auto& c : report.counterexamples) {
    out << "\nVIOLATION " << claim_name(c.verdict.claim) << " on " << c.graph << '\n'
        << witness_json(c.verdict.witness).dump() << '\n';
  }
  return out.str();
}

Json analysis_json(const AnalysisRecord& a) {
  Json j = Json::object();
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "analysis";
  j["graph"] = a.id;
  j["n"] = a.n;
  j["m"] = a.m;
  j["connected"] = a.connected;
  j["crossing_convention"] = convention_name(a.convention);
  if (!a.connected) return j;
  j["longest_length"] = a.longest.length;
  j["longest_count"] = a.longest.paths.size();
  j["truncated"] = a.longest.truncated;
  Json paths = Json::array();
  for (const auto& p : a.longest.paths) paths.push_back(path_json(p));
  j["longest_paths"] = std::move(paths);
  j["gallai_set"] = a.gallai ? Json(a.gallai->to_vector()) : Json(nullptr);
  j["hypotraceable"] = optional_json(a.hypotraceable);
  j["prop1"] = tally_json(a.prop1);
  Json pv = Json::array();
  for (const auto& v : a.pair_violations) pv.push_back(verdict_json(v));
  j["pair_violations"] = std::move(pv);
  j["triples_total"] = a.triples_total;
  Json triples = Json::array();
  for (const auto& t : a.triples) {
    Json tj = Json::object();
    tj["paths"] = t.indices;
    tj["f"] = t.analysis.f;
    tj["witnesses"] = t.analysis.witnesses.to_vector();
    tj["exclusive_sizes"] = t.analysis.exclusive_sizes;
    tj["t_counts"] = t.analysis.crossing_counts;
    tj["common"] = t.analysis.common.to_vector();
    Json claims = Json::object();
    for (const auto& v : t.verdicts) claims[std::string(claim_name(v.claim))] = status_name(v.status);
    tj["claims"] = std::move(claims);
    Json props = Json::array();
    for (const auto& p : t.propositions) {
      props.push_back({{"t", p.t},
                       {"status", status_name(p.verdict.status)},
                       {"subdivided_order", p.subdivided_order},
                       {"lifted_length", p.lifted_length},
                       {"base_f", p.base_f},
                       {"lifted_f", p.lifted_f},
                       {"lifted_longest", p.lifted_longest},
                       {"original_witness", p.original_witness}});
    }
    tj["subdivision"] = std::move(props);
    Json sizes = Json::array();
    for (const auto& v : t.size_bounds) sizes.push_back(verdict_json(v));
    tj["size_bounds"] = std::move(sizes);
    triples.push_back(std::move(tj));
  }
  j["triples"] = std::move(triples);
  return j;
}

std::string join(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  out << '}';
  return out.str();
}

std::string analysis_text(const AnalysisRecord& a) {
  std::ostringstream out;
  if (a.n <= kMaxGraph6Order) {
    out << "graph:        " << a.id << '\n';
  } else {
    out << "graph (edge list):\n" << a.id;
  }
  out << "order/size:   " << a.n << " / " << a.m << '\n';
  if (!a.connected) {
    out << "disconnected: longest-path claims do not apply\n";
    return out.str();
  }
  out << "l(G):         " << a.longest.length << '\n'
      << "|L(G)|:       " << a.longest.paths.size() << (a.longest.truncated ? " (truncated)" : "") << '\n'
      << "gallai set:   " << (a.gallai ? join(a.gallai->to_vector()) : std::string("n/a")) << '\n'
      << "hypotraceable: "
      << (a.hypotraceable ? (*a.hypotraceable ? "yes" : "no") : "unknown (budget)") << '\n'
      << "prop1 pairs:  " << a.prop1.holds << " hold, " << a.prop1.violated << " violated\n"
      << "triples:      " << a.triples.size() << " of " << a.triples_total << " shown"
      << " (t convention: " << convention_name(a.convention) << ")\n";
  for (const auto& t : a.triples) {
    out << "  " << a.longest.paths[t.indices[0]].to_string() << ' ' << a.longest.paths[t.indices[1]].to_string()
        << ' ' << a.longest.paths[t.indices[2]].to_string() << "  f=" << t.analysis.f
        << " V_f=" << join(t.analysis.witnesses.to_vector()) << " |X|=(" << t.analysis.exclusive_sizes[0] << ','
        << t.analysis.exclusive_sizes[1] << ',' << t.analysis.exclusive_sizes[2] << ") t=("
        << t.analysis.crossing_counts[0] << ',' << t.analysis.crossing_counts[1] << ','
        << t.analysis.crossing_counts[2] << ")\n";
    for (const auto& v : t.verdicts) {
      if (v.status == Status::kViolated) out << "    VIOLATED " << claim_name(v.claim) << '\n';
    }
    for (const auto& p : t.propositions) {
      out << "    subdivision t=" << p.t << ": " << status_name(p.verdict.status) << " (|V|=" << p.subdivided_order
          << ", l=" << p.lifted_length << ", f=" << p.lifted_f << ")\n";
    }
  }
  return out.str();
}

}  // namespace

std::optional<ReportFormat> report_format_from_name(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "text") return ReportFormat::kText;
  return std::nullopt;
}

std::string emit_report(const ScanReport& report, ReportFormat format, bool include_timing) {
  switch (format) {
    case ReportFormat::kJson: return scan_json(report, include_timing);
    case ReportFormat::kCsv: return scan_csv(report);
    case ReportFormat::kText: return scan_text(report, include_timing);
  }
  return {};
}

std::string emit_analysis(const AnalysisRecord& record, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: return analysis_json(record).dump(2) + "\n";
    case ReportFormat::kText: return analysis_text(record);
    case ReportFormat::kCsv: break;
  }
  throw InvalidArgument("analysis reports support json and text only");
}

}  // namespace lpi
