#pragma once

// Machine-readable verification report. The JSON shape is described in the
// README and versioned by kReportSchemaVersion. Rationals are
// serialised as exact "p/q" strings.

#include "ackkit/ack.hpp"
#include "ackkit/graph.hpp"
#include "ackkit/spectral.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ackkit {

inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::ordered_json;

struct InputProvenance {
  std::string kind;    // "file", "catalog" or "construction"
  std::string source;  // path, "catalog:NAME" or construction spec

  friend bool operator==(const InputProvenance&, const InputProvenance&) = default;
};

/// Classifies a graph spec string: "catalog:*" -> catalog, other "family:*"
/// forms -> construction, anything else -> file.
InputProvenance provenance_for(std::string_view spec);

struct GraphSummary {
  int n = 0;
  std::size_t edge_count = 0;
  std::vector<int> degree_multiset;
  std::string graph6;

  friend bool operator==(const GraphSummary&, const GraphSummary&) = default;
};

struct Report {
  int schema_version = kReportSchemaVersion;
  InputProvenance input;
  GraphSummary graph;
  SpectralProfile spectral;
  ClassCReport class_c;
  std::optional<AckReport> ack;
  std::optional<AckReport> oracle;
  std::optional<bool> oracle_agrees;
  std::map<std::string, double> timings_ms;  // empty unless requested

  friend bool operator==(const Report&, const Report&) = default;
};

struct ReportOptions {
  bool run_ack = true;
  AckOptions ack;
  bool run_oracle = false;
  int oracle_limit_n = 16;
  bool include_timings = false;
};

/// Throws AckInputError when run_ack is set and the graph has no edges.
Report build_report(const Graph& g, InputProvenance input, const ReportOptions& options = {});

Json to_json(const AckReport& r);
AckReport ack_report_from_json(const Json& j);
Json to_json(const Report& r);
Report report_from_json(const Json& j);

/// Pretty-printed JSON text (two-space indent, trailing newline).
std::string emit_report(const Report& r);
Report parse_report(std::string_view text);

}  // namespace ackkit
