#include "ackkit/batch.hpp"
#include "ackkit/constructions.hpp"
#include "ackkit/report.hpp"

#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ackkit;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("provenance") {
  CHECK(provenance_for("catalog:E8") == InputProvenance{"catalog", "catalog:E8"});
  CHECK(provenance_for("satellite:5").kind == "construction");
  CHECK(provenance_for("graphs/x.g6") == InputProvenance{"file", "graphs/x.g6"});
}

TEST_CASE("report contents") {
  const auto r = build_report(catalog("NUT7").graph, provenance_for("catalog:NUT7"));
  CHECK(r.schema_version == kReportSchemaVersion);
  CHECK(r.graph.n == 7);
  CHECK(r.graph.edge_count == 8);
  CHECK(r.graph.degree_multiset == std::vector<int>{2, 2, 2, 2, 2, 2, 4});
  CHECK(r.spectral.is_nut);
  REQUIRE(r.ack.has_value());
  CHECK(r.ack->witness == VertexSet{2, 3});
  CHECK_FALSE(r.oracle.has_value());
  CHECK_FALSE(r.oracle_agrees.has_value());
  CHECK(r.timings_ms.empty());

  const auto j = to_json(r);
  CHECK(j["spectral"]["full_kernel_vector"][0] == "-1/1");
  CHECK(j["ack"]["witness"] == Json::array({2, 3}));
  CHECK(j["ack"]["status"] == "WITNESS_FOUND");
  CHECK_FALSE(j.contains("timings_ms"));
  CHECK(j["class_c"]["failed"] == Json::array({"vertex_triangle", "edge_triangle"}));
}

TEST_CASE("report with oracle and timings") {
  ReportOptions o;
  o.run_oracle = true;
  o.include_timings = true;
  const auto r = build_report(catalog("G14").graph, provenance_for("catalog:G14"), o);
  REQUIRE(r.oracle.has_value());
  CHECK(r.oracle_agrees == true);
  CHECK(r.timings_ms.contains("classify"));
  CHECK(r.timings_ms.contains("ack_witness"));
  CHECK(r.timings_ms.contains("ack_brute_oracle"));

  ReportOptions no_ack;
  no_ack.run_ack = false;
  const auto classify_only = build_report(Graph::from_edges(3, {}), {"file", "empty"}, no_ack);
  CHECK_FALSE(classify_only.ack.has_value());
  CHECK_THROWS_AS(build_report(Graph::from_edges(3, {}), {"file", "empty"}), AckInputError);
}

TEST_CASE("reports round-trip through JSON") {
  std::vector<Report> reports;
  for (const auto& e : catalog_entries()) {
    ReportOptions o;
    o.run_oracle = true;
    reports.push_back(build_report(e.graph, {"catalog", "catalog:" + e.name}, o));
  }
  std::mt19937_64 rng(0x7a);
  for (int trial = 0; trial < 40; ++trial) {
    ReportOptions o;
    o.include_timings = trial % 2 == 0;
    reports.push_back(build_report(testing::random_connected_graph(rng, 2 + trial % 9, 0.4), {"file", "r"}, o));
  }
  ReportOptions aborted;
  aborted.ack.limit_n = 2;
  reports.push_back(build_report(satellite(3).graph, {"construction", "satellite:3"}, aborted));
  CHECK(reports.back().ack->status == AckStatus::AbortedTooLarge);

  for (const auto& r : reports) {
    const std::string text = emit_report(r);
    CHECK(parse_report(text) == r);
    CHECK(emit_report(parse_report(text)) == text);
  }
}

TEST_CASE("report parsing rejects other schema versions") {
  auto j = to_json(build_report(complete_graph(2), {"file", "k2"}));
  j["schema_version"] = 2;
  CHECK_THROWS_AS(report_from_json(j), std::invalid_argument);
  CHECK_THROWS(parse_report("{}"));
  CHECK_THROWS(parse_report("not json"));
}

TEST_CASE("batch over the catalog is deterministic") {
  TempDir in("ackkit_batch_in");
  TempDir out1("ackkit_batch_out1");
  TempDir out8("ackkit_batch_out8");
  for (const auto& e : catalog_entries()) {
    std::ofstream(in.path / (e.name + ".g6")) << emit_graph6(e.graph) << "\n";
  }
  std::ofstream(in.path / "notes.txt") << "ignored\n";

  BatchOptions one;
  one.json_out = out1.path;
  BatchOptions eight;
  eight.workers = 8;
  eight.json_out = out8.path;
  const auto s1 = run_batch(in.path, one);
  const auto s8 = run_batch(in.path, eight);

  CHECK(s1.entries.size() == catalog_entries().size());
  CHECK(s1.failed() == 0);
  CHECK(s1.count(AckStatus::WitnessFound) == catalog_entries().size());
  CHECK(s1.emit() == s8.emit());
  CHECK(s1.entries.front().file == "E10.g6");  // path order

  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(out1.path)) {
    ++files;
    CHECK(slurp(entry.path()) == slurp(out8.path / entry.path().filename()));
  }
  CHECK(files == catalog_entries().size() + 1);
  CHECK(parse_report(slurp(out1.path / "NUT7.g6.json")).input == InputProvenance{"file", "NUT7.g6"});
}

TEST_CASE("batch records per-file failures") {
  TempDir in("ackkit_batch_bad");
  std::ofstream(in.path / "a_good.edges") << "n 3\n1 2\n2 3\n";
  std::ofstream(in.path / "b_bad.g6") << "Bx\n";
  std::ofstream(in.path / "c_empty.edges") << "n 4\n";
  std::ofstream(in.path / "d_good.g6") << "Bw\n";

  const auto s = run_batch(in.path, {.workers = 3});
  REQUIRE(s.entries.size() == 4);
  CHECK(s.entries[0].ok());
  CHECK_FALSE(s.entries[1].ok());
  CHECK(s.entries[1].error.find("padding") != std::string::npos);
  CHECK_FALSE(s.entries[2].ok());
  CHECK(s.entries[2].error == "conjecture requires at least one edge");
  CHECK(s.entries[3].ok());
  CHECK(s.failed() == 2);
  const auto j = s.to_json();
  CHECK(j["totals"]["failed"] == 2);
  CHECK(j["files"][1]["ok"] == false);

  CHECK_THROWS_AS(run_batch(in.path / "a_good.edges"), std::invalid_argument);
  CHECK_THROWS_AS(run_batch(in.path, {.workers = 0}), std::invalid_argument);
}
