#include "ackkit/batch.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

namespace ackkit {

namespace fs = std::filesystem;

std::size_t BatchSummary::failed() const {
  return static_cast<std::size_t>(std::ranges::count_if(entries, [](const BatchEntry& e) { return !e.ok(); }));
}

std::size_t BatchSummary::count(AckStatus s) const {
  return static_cast<std::size_t>(
      std::ranges::count_if(entries, [s](const BatchEntry& e) { return e.ok() && e.report->ack && e.report->ack->status == s; }));
}

Json BatchSummary::to_json() const {
  Json files = Json::array();
  for (const auto& e : entries) {
    Json row;
    row["file"] = e.file;
    row["ok"] = e.ok();
    if (e.ok()) {
      const auto& r = *e.report;
      row["n"] = r.graph.n;
      row["edge_count"] = r.graph.edge_count;
      row["nullity"] = r.spectral.nullity;
      row["in_class_c"] = r.class_c.in_class_c;
      row["ack_status"] = r.ack ? Json(std::string(to_string(r.ack->status))) : Json(nullptr);
      row["witness"] = r.ack && r.ack->witness ? Json(r.ack->witness->members()) : Json(nullptr);
    } else {
      row["error"] = e.error;
    }
    files.push_back(std::move(row));
  }
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["files"] = std::move(files);
  j["totals"] = {{"files", entries.size()},
                 {"failed", failed()},
                 {"witness_found", count(AckStatus::WitnessFound)},
                 {"no_witness", count(AckStatus::NoWitness)},
                 {"aborted", count(AckStatus::AbortedTooLarge)}};
  return j;
}

std::string BatchSummary::emit() const { return to_json().dump(2) + "\n"; }

std::vector<fs::path> batch_inputs(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext == ".g6" || ext == ".graph6" || ext == ".edges") out.push_back(entry.path());
  }
  std::ranges::sort(out);
  return out;
}

namespace {

BatchEntry process(const fs::path& path, const BatchOptions& options) {
  BatchEntry e;
  e.file = path.filename().string();
  try {
    ReportOptions ro;
    ro.ack = options.ack;
    e.report = build_report(load_graph_file(path), {"file", e.file}, ro);
  } catch (const std::exception& ex) {
    e.error = ex.what();
  }
  return e;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

BatchSummary run_batch(const fs::path& dir, const BatchOptions& options) {
  if (!fs::is_directory(dir)) throw std::invalid_argument("not a directory: " + dir.string());
  if (options.workers < 1) throw std::invalid_argument("workers must be >= 1");

  const auto inputs = batch_inputs(dir);
  BatchSummary summary;
  summary.entries.resize(inputs.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) summary.entries[i] = process(inputs[i], options);
  };
  {
    const auto count = std::min<std::size_t>(static_cast<std::size_t>(options.workers), std::max<std::size_t>(inputs.size(), 1));
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < count; ++t) pool.emplace_back(work);
    work();
  }

  if (options.json_out) {
    fs::create_directories(*options.json_out);
    for (const auto& e : summary.entries)
      if (e.ok()) write_text(*options.json_out / (e.file + ".json"), emit_report(*e.report));
    write_text(*options.json_out / "summary.json", summary.emit());
  }
  return summary;
}

}  // namespace ackkit
