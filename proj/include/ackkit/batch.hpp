#pragma once

// Directory batch verification with a bounded worker pool. Inputs are the
// .g6/.graph6/.edges files of one directory, processed in path order; the
// output does not depend on the number of workers.

#include "ackkit/report.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ackkit {

struct BatchOptions {
  int workers = 1;
  AckOptions ack;
  // When set, <file>.json per input and summary.json are written here.
  std::optional<std::filesystem::path> json_out;
};

struct BatchEntry {
  std::string file;  // name relative to the input directory
  std::optional<Report> report;
  std::string error;  // non-empty iff report is absent

  bool ok() const { return report.has_value(); }
};

struct BatchSummary {
  std::vector<BatchEntry> entries;

  std::size_t failed() const;
  std::size_t count(AckStatus s) const;
  Json to_json() const;
  std::string emit() const;  // pretty JSON with trailing newline
};

std::vector<std::filesystem::path> batch_inputs(const std::filesystem::path& dir);

/// Throws std::invalid_argument when `dir` is not a directory or workers < 1.
BatchSummary run_batch(const std::filesystem::path& dir, const BatchOptions& options = {});

}  // namespace ackkit
