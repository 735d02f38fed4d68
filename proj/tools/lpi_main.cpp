// lpi: longest-path intersection toolkit.
//
//   lpi gen --n 6                      connected graphs on 6 vertices, graph6
//   lpi scan --n 7 --checks all        exhaustive claim scan
//   lpi analyze --graph6 'Cs'          single-graph deep dive
//   lpi subdivide --graph6 'Cs' --t 2  pendant extension + subdivision
//   lpi verify-prop --n 5 --t 1,2      subdivision sweep

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpi/error.hpp"
#include "lpi/generate.hpp"
#include "lpi/graph.hpp"
#include "lpi/report.hpp"
#include "lpi/scan.hpp"
#include "lpi/subdivision.hpp"
#include "lpi/theory_checks.hpp"

namespace {

using namespace lpi;

struct ConfigError : Error {
  using Error::Error;
};

struct InputArgs {
  std::string input;
  std::string graph6;
  std::string input_format = "auto";
};

void add_input_flags(CLI::App* cmd, InputArgs& args) {
  cmd->add_option("--input", args.input, "graph6 or edge-list file ('-' for stdin)");
  cmd->add_option("--graph6", args.graph6, "a single graph6 record");
  cmd->add_option("--input-format", args.input_format, "auto | graph6 | edgelist")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
}

InputFormat input_format(const std::string& name) {
  if (name == "graph6") return InputFormat::kGraph6;
  if (name == "edgelist") return InputFormat::kEdgeList;
  return InputFormat::kAuto;
}

std::vector<Graph> read_input(const InputArgs& args) {
  if (!args.graph6.empty()) return {parse_graph6(args.graph6)};
  if (args.input.empty()) throw ConfigError("one of --input or --graph6 is required");
  ScanSource source{ScanSource::Kind::kFile, 0, args.input, input_format(args.input_format)};
  return load_corpus(source);
}

void check_order(std::size_t n, bool allow_n8) {
  if (n < 1 || n > kMaxGeneratedOrder) throw ConfigError("--n must be between 1 and 8");
  if (n == 8 && !allow_n8) throw ConfigError("n = 8 takes considerably longer; pass --allow-n8 to confirm");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  out << text;
}

ReportFormat report_format(const std::string& name) {
  auto f = report_format_from_name(name);
  if (!f) throw ConfigError("unknown format '" + name + "'");
  return *f;
}

std::set<ClaimId> parse_checks(const std::string& spec) {
  if (spec == "all") return default_scan_claims();
  std::set<ClaimId> out;
  std::stringstream ss(spec);
  for (std::string name; std::getline(ss, name, ',');) {
    if (name == "all") {
      auto all = default_scan_claims();
      out.insert(all.begin(), all.end());
      continue;
    }
    auto id = claim_from_name(name);
    if (!id) throw ConfigError("unknown claim '" + name + "'");
    out.insert(*id);
  }
  if (out.empty()) throw ConfigError("--checks selects no claims");
  return out;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::size_t n = 0;
  bool up_to = false;
  bool allow_n8 = false;
  std::string out;
};

int run_gen(const GenArgs& a) {
  check_order(a.n, a.allow_n8);
  const auto graphs = a.up_to ? generate_connected_graphs_up_to(a.n) : generate_connected_graphs(a.n);
  std::string text;
  for (const auto& g : graphs) text += to_graph6(g) + '\n';
  write_output(a.out, text);
  return kExitOk;
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
  std::size_t n = 0;
  InputArgs input;
  bool allow_n8 = false;
  std::string format = "json";
  std::string out;
  std::size_t cap = kDefaultPathCap;
  std::vector<std::size_t> t;
  std::string checks = "all";
  std::size_t jobs = 1;
  std::string triples = "shortcut";
  std::uint64_t triple_cap = 1'000'000;
  std::uint64_t exhaustive_below = 200'000;
  bool strict_t = false;
  bool timing = false;
  bool keep_going = false;
};

int run_scan(const ScanArgs& a) {
  ScanConfig config;
  if (a.n > 0) {
    if (!a.input.input.empty() || !a.input.graph6.empty()) throw ConfigError("--n and --input are exclusive");
    check_order(a.n, a.allow_n8);
    config.source.kind = ScanSource::Kind::kGenerate;
    config.source.max_order = a.n;
  } else {
    if (a.input.input.empty() && a.input.graph6.empty()) throw ConfigError("one of --n, --input or --graph6 is required");
    config.source.kind = ScanSource::Kind::kFile;
    config.source.path = a.input.input;
    config.source.format = input_format(a.input.input_format);
  }
  if (a.cap < 1 || a.triple_cap < 1) throw ConfigError("caps must be at least 1");
  auto& o = config.options;
  o.checks = parse_checks(a.checks);
  o.path_cap = a.cap;
  o.subdivision_t = a.t;
  o.jobs = std::max<std::size_t>(1, a.jobs);
  o.triple_cap = a.triple_cap;
  o.exhaustive_below = a.exhaustive_below;
  o.convention = a.strict_t ? CrossingConvention::kStrict : CrossingConvention::kIncludeSingleVertex;
  o.stop_on_proven_violation = !a.keep_going;
  if (a.triples == "all") o.triple_mode = TripleMode::kAll;
  if (a.triples == "capped") o.triple_mode = TripleMode::kCapped;
  const auto format = report_format(a.format);

  ScanReport report;
  if (!a.input.graph6.empty()) {
    report = scan_graphs({parse_graph6(a.input.graph6)}, o);
    report.source_description = "graph6 " + a.input.graph6;
  } else {
    report = scan(config);
  }
  write_output(a.out, emit_report(report, format, a.timing));
  if (a.timing && format != ReportFormat::kText) {
    std::cerr << "scanned " << report.summary.graphs << " graphs in " << report.wall_time.count() << " s\n";
  }
  return exit_code(report);
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  InputArgs input;
  std::string format = "text";
  std::string out;
  std::size_t cap = kDefaultPathCap;
  std::uint64_t triple_cap = 1'000;
  std::vector<std::size_t> t;
  bool strict_t = false;
  bool skip_hypotraceable = false;
};

int run_analyze(const AnalyzeArgs& a) {
  const auto format = report_format(a.format);
  if (format == ReportFormat::kCsv) throw ConfigError("analyze supports --format text or json");
  AnalyzeOptions options;
  options.path_cap = a.cap;
  options.triple_cap = a.triple_cap;
  options.subdivision_t = a.t;
  options.convention = a.strict_t ? CrossingConvention::kStrict : CrossingConvention::kIncludeSingleVertex;
  options.hypotraceable = !a.skip_hypotraceable;

  int code = kExitOk;
  std::vector<std::string> parts;
  for (const auto& g : read_input(a.input)) {
    const auto record = analyze_one(g, options);
    for (const auto& t : record.triples) {
      for (const auto& v : t.verdicts) {
        if (v.status != Status::kViolated) continue;
        code = std::max(code, claim_kind(v.claim) == ClaimKind::kProven ? kExitProvenViolation
                                                                      : kExitConjectureViolation);
      }
      for (const auto& p : t.propositions)
        if (p.verdict.status == Status::kViolated) code = kExitProvenViolation;
    }
    if (!record.pair_violations.empty()) code = kExitProvenViolation;
    parts.push_back(emit_analysis(record, format));
  }
  std::string text;
  if (format == ReportFormat::kJson && parts.size() != 1) {
    text = "[\n";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto part = parts[i];
      while (!part.empty() && part.back() == '\n') part.pop_back();
      text += part + (i + 1 < parts.size() ? ",\n" : "\n");
    }
    text += "]\n";
  } else {
    for (std::size_t i = 0; i < parts.size(); ++i) text += (i ? "\n" : "") + parts[i];
  }
  write_output(a.out, text);
  return code;
}

// ---------------------------------------------------------------- subdivide

struct SubdivideArgs {
  InputArgs input;
  std::vector<std::size_t> triple{0, 1, 2};
  std::size_t t = 1;
  std::size_t cap = kDefaultPathCap;
  std::string format = "graph6";
  std::string out;
};

std::string graph_text(const Graph& g, bool edgelist) {
  if (!edgelist && g.order() <= kMaxGraph6Order) return to_graph6(g) + '\n';
  return to_edge_list(g);
}

int run_subdivide(const SubdivideArgs& a) {
  if (a.format != "graph6" && a.format != "edgelist" && a.format != "json") {
    throw ConfigError("subdivide supports --format graph6, edgelist or json");
  }
  const auto graphs = read_input(a.input);
  if (graphs.size() != 1) throw ConfigError("subdivide expects exactly one input graph");
  const auto& g = graphs.front();
  const GraphContext ctx(g, a.cap);
  const auto& paths = ctx.longest().paths;
  if (a.triple.size() != 3) throw ConfigError("--triple takes three indices into the longest-path list");
  for (auto i : a.triple) {
    if (i >= paths.size()) {
      throw ConfigError("--triple index " + std::to_string(i) + " out of range; the graph has " +
                        std::to_string(paths.size()) + " longest paths");
    }
  }
  const PathTriple triple(g, paths[a.triple[0]], paths[a.triple[1]], paths[a.triple[2]]);
  const auto inst = build_subdivided_instance(g, triple, a.t);

  if (a.format != "json") {
    const bool edgelist = a.format == "edgelist";
    write_output(a.out, graph_text(inst.extended.graph, edgelist) + graph_text(inst.result(), edgelist));
    return kExitOk;
  }
  using Json = nlohmann::ordered_json;
  auto encode = [](const Graph& h) { return encode_graph(h); };
  auto path_json = [](const Path& p) { return std::vector<Vertex>(p.vertices().begin(), p.vertices().end()); };
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "subdivision";
  j["base"] = encode(g);
  j["t"] = a.t;
  j["base_paths"] = {path_json(triple[0]), path_json(triple[1]), path_json(triple[2])};
  Json pendants = Json::array();
  for (const auto& [end, pendant] : inst.extended.pendants) pendants.push_back({end, pendant});
  j["pendants"] = std::move(pendants);
  j["extended"] = encode(inst.extended.graph);
  j["subdivided"] = encode(inst.result());
  j["lifted_paths"] = {path_json(inst.lifted[0]), path_json(inst.lifted[1]), path_json(inst.lifted[2])};
  Json provenance = Json::array();
  for (Vertex v = 0; v < inst.result().order(); ++v) {
    const auto o = inst.origin(v);
    switch (o.kind) {
      case Provenance::kOriginal: provenance.push_back({{"kind", "original"}}); break;
      case Provenance::kPendant: provenance.push_back({{"kind", "pendant"}}); break;
      case Provenance::kSubdivision:
        provenance.push_back({{"kind", "subdivision"}, {"edge", {o.edge.u, o.edge.v}}, {"position", o.position}});
        break;
    }
  }
  j["provenance"] = std::move(provenance);
  write_output(a.out, j.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------- verify-prop

struct VerifyArgs {
  std::size_t n = 0;
  InputArgs input;
  std::vector<std::size_t> t{1, 2};
  std::size_t max_order = 60;
  double budget_seconds = 120;
  std::string format = "text";
  std::string out;
};

int run_verify_prop(const VerifyArgs& a) {
  std::vector<Graph> corpus;
  if (a.n > 0) {
    check_order(a.n, false);
    corpus = generate_connected_graphs_up_to(a.n);
  } else {
    corpus = read_input(a.input);
  }
  PropositionOptions options;
  options.max_order = a.max_order;
  options.budget = std::chrono::milliseconds(static_cast<long long>(a.budget_seconds * 1000));

  ClaimTally proposition;
  ClaimTally size_bound;
  std::vector<Counterexample> violations;
  std::uint64_t graphs = 0;
  std::uint64_t triples = 0;
  for (const auto& g : corpus) {
    if (!is_connected(g)) continue;
    const GraphContext ctx(g);
    const auto& paths = ctx.longest().paths;
    if (paths.size() < 3 || ctx.truncated()) continue;
    ++graphs;
    LongestPathCache cache;
    for (std::size_t i = 0; i < paths.size(); ++i)
      for (std::size_t j = i + 1; j < paths.size(); ++j)
        for (std::size_t k = j + 1; k < paths.size(); ++k) {
          ++triples;
          const PathTriple triple(g, paths[i], paths[j], paths[k]);
          for (auto t : a.t) {
            auto r = verify_proposition(g, triple, t, options, &cache);
            proposition.add(r.verdict.status);
            if (r.verdict.status == Status::kViolated) violations.push_back({ctx.encoded(), r.verdict});
            auto s = check_size_bound(g, triple, t);
            size_bound.add(s.status);
            if (s.status == Status::kViolated) violations.push_back({ctx.encoded(), s});
          }
        }
  }
  const int code = violations.empty() ? kExitOk : kExitProvenViolation;
  if (a.format == "json") {
    using Json = nlohmann::ordered_json;
    auto tally = [](const ClaimTally& t) {
      return Json{{"holds", t.holds}, {"violated", t.violated}, {"skipped_budget", t.skipped_budget}};
    };
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = "verify-prop";
    j["graphs"] = graphs;
    j["triples"] = triples;
    j["t"] = a.t;
    j["subdivision_prop"] = tally(proposition);
    j["size_bound"] = tally(size_bound);
    Json bad = Json::array();
    for (const auto& v : violations) bad.push_back({{"graph", v.graph}, {"claim", claim_name(v.verdict.claim)}});
    j["violations"] = std::move(bad);
    write_output(a.out, j.dump(2) + "\n");
  } else if (a.format == "text") {
    std::ostringstream out;
    out << "graphs with >= 3 longest paths: " << graphs << "\ntriples: " << triples << "\n"
        << "subdivision_prop: " << proposition.holds << " hold, " << proposition.violated << " violated, "
        << proposition.skipped_budget << " over budget\n"
        << "size_bound:       " << size_bound.holds << " hold, " << size_bound.violated << " violated\n";
    for (const auto& v : violations) out << "VIOLATION " << claim_name(v.verdict.claim) << " on " << v.graph << '\n';
    write_output(a.out, out.str());
  } else {
    throw ConfigError("verify-prop supports --format text or json");
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact longest-path intersection analysis"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate connected graphs (graph6, one per line)");
  gen_cmd->add_option("--n", gen.n, "number of vertices (1..8)")->required();
  gen_cmd->add_flag("--up-to", gen.up_to, "include every order from 1 to n");
  gen_cmd->add_flag("--allow-n8", gen.allow_n8, "permit n = 8");
  gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Check every claim on a corpus of graphs");
  scan_cmd->add_option("--n", scan_args.n, "scan all connected graphs on 1..n vertices");
  add_input_flags(scan_cmd, scan_args.input);
  scan_cmd->add_flag("--allow-n8", scan_args.allow_n8, "permit --n 8");
  scan_cmd->add_option("--format", scan_args.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  scan_cmd->add_option("--out", scan_args.out, "output file (default stdout)");
  scan_cmd->add_option("--cap", scan_args.cap, "maximum longest paths enumerated per graph");
  scan_cmd->add_option("--t", scan_args.t, "subdivision multiplicities to verify, e.g. 1,2")->delimiter(',');
  scan_cmd->add_option("--checks", scan_args.checks, "'all' or a comma-separated list of claim ids");
  scan_cmd->add_option("--jobs", scan_args.jobs, "worker threads");
  scan_cmd->add_option("--triples", scan_args.triples, "shortcut | all | capped")
      ->check(CLI::IsMember({"shortcut", "all", "capped"}));
  scan_cmd->add_option("--triple-cap", scan_args.triple_cap, "maximum triples evaluated per graph");
  scan_cmd->add_option("--exhaustive-below", scan_args.exhaustive_below,
                       "evaluate every triple when a graph has at most this many, even if the shortcut applies");
  scan_cmd->add_flag("--strict-t-convention", scan_args.strict_t, "count only crossings with at least two vertices");
  scan_cmd->add_flag("--timing", scan_args.timing, "report wall time");
  scan_cmd->add_flag("--keep-going", scan_args.keep_going, "do not stop after a proven-statement violation");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of individual graphs");
  add_input_flags(analyze_cmd, analyze_args.input);
  analyze_cmd->add_option("--format", analyze_args.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--out", analyze_args.out, "output file (default stdout)");
  analyze_cmd->add_option("--cap", analyze_args.cap, "maximum longest paths enumerated");
  analyze_cmd->add_option("--triple-cap", analyze_args.triple_cap, "maximum triples reported");
  analyze_cmd->add_option("--t", analyze_args.t, "subdivision multiplicities to verify")->delimiter(',');
  analyze_cmd->add_flag("--strict-t-convention", analyze_args.strict_t, "count only crossings with at least two vertices");
  analyze_cmd->add_flag("--no-hypotraceable", analyze_args.skip_hypotraceable, "skip the hypotraceability test");

  SubdivideArgs sub_args;
  auto* sub_cmd = app.add_subcommand("subdivide", "Build G' and G^t for a triple of longest paths");
  add_input_flags(sub_cmd, sub_args.input);
  sub_cmd->add_option("--triple", sub_args.triple, "indices into the sorted longest-path list")->delimiter(',');
  sub_cmd->add_option("--t", sub_args.t, "interior vertices per edge");
  sub_cmd->add_option("--cap", sub_args.cap, "maximum longest paths enumerated");
  sub_cmd->add_option("--format", sub_args.format, "graph6 | edgelist | json");
  sub_cmd->add_option("--out", sub_args.out, "output file (default stdout)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify-prop", "Brute-force the subdivision statement over a corpus");
  verify_cmd->add_option("--n", verify_args.n, "all connected graphs on 1..n vertices");
  add_input_flags(verify_cmd, verify_args.input);
  verify_cmd->add_option("--t", verify_args.t, "subdivision multiplicities")->delimiter(',');
  verify_cmd->add_option("--max-order", verify_args.max_order, "skip instances whose G^t is larger");
  verify_cmd->add_option("--budget-seconds", verify_args.budget_seconds, "wall-clock budget per instance");
  verify_cmd->add_option("--format", verify_args.format, "text | json");
  verify_cmd->add_option("--out", verify_args.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*scan_cmd) return run_scan(scan_args);
    if (*analyze_cmd) return run_analyze(analyze_args);
    if (*sub_cmd) return run_subdivide(sub_args);
    if (*verify_cmd) return run_verify_prop(verify_args);
  } catch (const ConfigError& e) {
    std::cerr << "lpi: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const ParseError& e) {
    std::cerr << "lpi: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const lpi::Error& e) {
    std::cerr << "lpi: " << e.what() << '\n';
    return kExitConfigError;
  }
  return kExitConfigError;
}
