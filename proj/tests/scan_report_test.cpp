#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include "json.hpp"

#include "lpi/error.hpp"
#include "lpi/generate.hpp"
#include "lpi/report.hpp"
#include "lpi/scan.hpp"
#include "test_graphs.hpp"

namespace lpi {
namespace {

const ClaimTally& tally(const ScanReport& r, ClaimId id) { return r.summary.tallies[static_cast<std::size_t>(id)]; }

TEST(ScanGraph, PathIsVacuous) {
  const auto rec = scan_graph(parse_graph6("Bg"), ScanOptions{});
  EXPECT_EQ(rec.status, GraphStatus::kVacuous);
  EXPECT_EQ(rec.longest_count, 1u);
  EXPECT_EQ(rec.triples_total, 0u);
  EXPECT_TRUE(rec.violations.empty());
}

TEST(ScanGraph, ClawIsAnalyzed) {
  const auto rec = scan_graph(testing::star_graph(3), ScanOptions{});
  EXPECT_EQ(rec.status, GraphStatus::kAnalyzed);
  EXPECT_EQ(rec.triples_total, 1u);
  EXPECT_EQ(rec.triples_examined, 1u);
  EXPECT_EQ(rec.pairs_examined, 3u);
  EXPECT_EQ(rec.gallai_size, 1u);
  EXPECT_EQ(rec.max_f, 0u);
  EXPECT_EQ(rec.min_t, 1u);
}

TEST(ScanGraph, DisconnectedIsRecorded) {
  const auto rec = scan_graph(Graph::from_edge_list(2, {}), ScanOptions{});
  EXPECT_EQ(rec.status, GraphStatus::kDisconnected);
}

TEST(Scan, SmallCorpus) {
  ScanConfig cfg;
  cfg.source.max_order = 5;
  const auto r = scan(cfg);
  EXPECT_EQ(r.graphs.size(), 31u);
  EXPECT_EQ(r.summary.graphs, 31u);
  EXPECT_EQ(exit_code(r), kExitOk);
  EXPECT_TRUE(std::is_sorted(r.graphs.begin(), r.graphs.end(),
                             [](const auto& a, const auto& b) { return a.id < b.id; }));
}

TEST(Scan, EmptyCorpus) {
  const auto r = scan_graphs({}, ScanOptions{});
  EXPECT_EQ(r.summary.graphs, 0u);
  EXPECT_EQ(exit_code(r), kExitOk);
  EXPECT_NO_THROW(emit_report(r, ReportFormat::kJson));
}

TEST(Scan, FileSource) {
  const auto path = std::filesystem::temp_directory_path() / "lpi_scan_source.g6";
  {
    std::ofstream out(path);
    out << "Bg\nCs\nC~\n";
  }
  ScanConfig cfg;
  cfg.source.kind = ScanSource::Kind::kFile;
  cfg.source.path = path.string();
  EXPECT_EQ(load_corpus(cfg.source).size(), 3u);
  EXPECT_EQ(scan(cfg).summary.graphs, 3u);
  std::filesystem::remove(path);
  EXPECT_THROW(load_corpus(cfg.source), Error);
}

TEST(Scan, ExitCodesFollowViolationKind) {
  ScanReport r;
  GraphRecord rec;
  rec.id = "Cs";
  rec.violations.push_back({ClaimId::kConjectureZ, Status::kViolated, {}});
  r.graphs.push_back(rec);
  finalize_report(r);
  EXPECT_EQ(r.summary.conjecture_violations, 1u);
  EXPECT_EQ(r.counterexamples.size(), 1u);
  EXPECT_EQ(exit_code(r), kExitConjectureViolation);
  r.graphs[0].violations.push_back({ClaimId::kTheorem1, Status::kViolated, {}});
  finalize_report(r);
  EXPECT_EQ(exit_code(r), kExitProvenViolation);
  const auto text = emit_report(r, ReportFormat::kText);
  EXPECT_NE(text.find("VIOLATION thm1"), std::string::npos);
}

TEST(Scan, JobsDoNotChangeOutput) {
  const auto corpus = generate_connected_graphs_up_to(6);
  ScanOptions one;
  ScanOptions many;
  many.jobs = 4;
  const auto a = scan_graphs(corpus, one);
  const auto b = scan_graphs(corpus, many);
  for (auto fmt : {ReportFormat::kJson, ReportFormat::kCsv, ReportFormat::kText})
    EXPECT_EQ(emit_report(a, fmt), emit_report(b, fmt));
}

// The shortcut marks claims as implied; exhaustive evaluation must agree.
TEST(Scan, ShortcutIsSound) {
  const auto corpus = generate_connected_graphs_up_to(6);
  ScanOptions sc;
  sc.exhaustive_below = 0;
  ScanOptions all;
  all.triple_mode = TripleMode::kAll;
  const auto a = scan_graphs(corpus, sc);
  const auto b = scan_graphs(corpus, all);
  EXPECT_GT(a.summary.shortcut, 0u);
  EXPECT_EQ(b.summary.shortcut, 0u);
  EXPECT_EQ(exit_code(b), kExitOk);
  EXPECT_EQ(b.summary.triples_implied, 0u);
  EXPECT_EQ(a.summary.triples_examined + a.summary.triples_implied, b.summary.triples_examined);
  const auto& za = tally(a, ClaimId::kConjectureZ);
  const auto& zb = tally(b, ClaimId::kConjectureZ);
  EXPECT_EQ(za.holds + za.implied, zb.holds);
  EXPECT_EQ(za.vacuous, zb.vacuous);
  const auto& pa = tally(a, ClaimId::kProp1);
  EXPECT_EQ(pa.holds + pa.implied, tally(b, ClaimId::kProp1).holds);
}

TEST(Scan, CappedModeSkipsTheRest) {
  ScanOptions o;
  o.triple_mode = TripleMode::kCapped;
  o.triple_cap = 2;
  const auto rec = scan_graph(testing::complete_graph(4), o);
  EXPECT_EQ(rec.triples_examined, 2u);
  EXPECT_EQ(rec.triples_skipped, rec.triples_total - 2);
}

TEST(Scan, SubdivisionClaimsRunWhenRequested) {
  ScanOptions o;
  o.checks.insert(ClaimId::kSubdivisionProposition);
  o.checks.insert(ClaimId::kSizeBound);
  o.subdivision_t = {1};
  const auto rec = scan_graph(testing::star_graph(3), o);
  EXPECT_EQ(rec.tallies[static_cast<std::size_t>(ClaimId::kSubdivisionProposition)].holds, 1u);
  EXPECT_EQ(rec.tallies[static_cast<std::size_t>(ClaimId::kSizeBound)].holds, 1u);
}

TEST(Report, JsonShape) {
  ScanConfig cfg;
  cfg.source.max_order = 4;
  const auto r = scan(cfg);
  const auto j = nlohmann::json::parse(emit_report(r, ReportFormat::kJson));
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["kind"], "scan");
  EXPECT_EQ(j["graphs"].size(), 10u);
  EXPECT_EQ(j["summary"]["exit_code"], 0);
  EXPECT_FALSE(j["summary"].contains("wall_seconds"));
  const auto timed = nlohmann::json::parse(emit_report(r, ReportFormat::kJson, true));
  EXPECT_TRUE(timed["summary"].contains("wall_seconds"));
}

TEST(Report, CsvHasOneRowPerGraph) {
  ScanConfig cfg;
  cfg.source.max_order = 4;
  const auto csv = emit_report(scan(cfg), ReportFormat::kCsv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 11);
  EXPECT_EQ(csv.rfind("graph,n,m,status", 0), 0u);
}

TEST(Report, FormatNames) {
  EXPECT_EQ(report_format_from_name("json"), ReportFormat::kJson);
  EXPECT_EQ(report_format_from_name("csv"), ReportFormat::kCsv);
  EXPECT_EQ(report_format_from_name("text"), ReportFormat::kText);
  EXPECT_FALSE(report_format_from_name("xml").has_value());
}

TEST(Analyze, Claw) {
  AnalyzeOptions o;
  o.subdivision_t = {1, 2};
  const auto rec = analyze_one(testing::star_graph(3), o);
  EXPECT_TRUE(rec.connected);
  EXPECT_EQ(rec.longest.paths.size(), 3u);
  ASSERT_TRUE(rec.gallai.has_value());
  EXPECT_EQ(rec.gallai->to_vector(), (std::vector<Vertex>{0}));
  EXPECT_EQ(rec.hypotraceable, false);
  ASSERT_EQ(rec.triples.size(), 1u);
  EXPECT_EQ(rec.triples[0].propositions.size(), 2u);
  EXPECT_EQ(rec.triples[0].size_bounds.size(), 2u);
  const auto j = nlohmann::json::parse(emit_analysis(rec, ReportFormat::kJson));
  EXPECT_EQ(j["kind"], "analysis");
  EXPECT_FALSE(emit_analysis(rec, ReportFormat::kText).empty());
  EXPECT_THROW(emit_analysis(rec, ReportFormat::kCsv), InvalidArgument);
}

}  // namespace
}  // namespace lpi
