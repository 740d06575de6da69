#include "ackkit/report.hpp"

#include <chrono>

namespace ackkit {

InputProvenance provenance_for(std::string_view spec) {
  if (spec.starts_with("catalog:")) return {"catalog", std::string(spec)};
  for (std::string_view prefix : {"satellite:", "cycle:", "path:", "complete:", "construct:"})
    if (spec.starts_with(prefix)) return {"construction", std::string(spec)};
  return {"file", std::string(spec)};
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

Json vector_to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

QVector vector_from_json(const Json& j) {
  QVector v;
  for (const auto& x : j) v.push_back(rational_from_string(x.get<std::string>()));
  return v;
}

}  // namespace

Report build_report(const Graph& g, InputProvenance input, const ReportOptions& options) {
  Report r;
  r.input = std::move(input);
  r.graph = {g.order(), g.edge_count(), g.degree_sequence(), emit_graph6(g)};

  auto start = Clock::now();
  r.spectral = classify(g);
  const auto structure = structural_predicates(g);
  r.class_c = class_c_report(r.spectral, structure);
  if (options.include_timings) r.timings_ms["classify"] = elapsed_ms(start);

  if (options.run_ack) {
    start = Clock::now();
    r.ack = ack_witness(g, options.ack);
    if (options.include_timings) r.timings_ms["ack_witness"] = elapsed_ms(start);
  }
  if (options.run_oracle) {
    start = Clock::now();
    r.oracle = ack_brute_oracle(g, options.oracle_limit_n);
    if (options.include_timings) r.timings_ms["ack_brute_oracle"] = elapsed_ms(start);
    if (r.ack && r.oracle->status != AckStatus::AbortedTooLarge && r.ack->status != AckStatus::AbortedTooLarge)
      r.oracle_agrees = r.ack->status == r.oracle->status && r.ack->witness == r.oracle->witness;
  }
  return r;
}

Json to_json(const AckReport& r) {
  Json j;
  j["status"] = std::string(to_string(r.status));
  j["witness"] = r.witness ? Json(r.witness->members()) : Json(nullptr);
  j["method"] = std::string(to_string(r.method));
  j["checked_count"] = r.checked_count;
  j["n"] = r.n;
  return j;
}

AckReport ack_report_from_json(const Json& j) {
  AckReport r;
  r.status = ack_status_from_string(j.at("status").get<std::string>());
  if (!j.at("witness").is_null()) r.witness = VertexSet(j.at("witness").get<std::vector<int>>());
  r.method = ack_method_from_string(j.at("method").get<std::string>());
  r.checked_count = j.at("checked_count").get<std::uint64_t>();
  r.n = j.at("n").get<int>();
  return r;
}

Json to_json(const Report& r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["input"] = {{"kind", r.input.kind}, {"source", r.input.source}};
  j["graph"] = {{"n", r.graph.n},
                {"edge_count", r.graph.edge_count},
                {"degree_multiset", r.graph.degree_multiset},
                {"graph6", r.graph.graph6}};

  const auto& s = r.spectral;
  j["spectral"] = {{"nullity", s.nullity},
                   {"is_core", s.is_core},
                   {"is_nut", s.is_nut},
                   {"zero_is_main", s.zero_is_main},
                   {"mult_plus1", s.mult_plus1},
                   {"mult_minus1", s.mult_minus1},
                   {"full_kernel_vector", s.full_kernel_vector ? vector_to_json(*s.full_kernel_vector) : Json(nullptr)}};

  const auto& c = r.class_c;
  j["class_c"] = {{"core", c.core},
                  {"zero_main", c.zero_main},
                  {"vertex_triangle", c.vertex_triangle},
                  {"edge_triangle", c.edge_triangle},
                  {"non_regular", c.non_regular},
                  {"connected", c.connected},
                  {"non_bipartite", c.non_bipartite},
                  {"diameter_2_or_3", c.diameter_2_or_3},
                  {"in_class_c", c.in_class_c},
                  {"failed", c.failed_conditions()}};

  j["ack"] = r.ack ? to_json(*r.ack) : Json(nullptr);
  j["oracle"] = r.oracle ? to_json(*r.oracle) : Json(nullptr);
  j["oracle_agrees"] = r.oracle_agrees ? Json(*r.oracle_agrees) : Json(nullptr);
  if (!r.timings_ms.empty()) {
    Json t = Json::object();
    for (const auto& [phase, ms] : r.timings_ms) t[phase] = ms;
    j["timings_ms"] = t;
  }
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kReportSchemaVersion)
    throw std::invalid_argument("unsupported report schema_version " + std::to_string(r.schema_version));
  r.input = {j.at("input").at("kind").get<std::string>(), j.at("input").at("source").get<std::string>()};

  const auto& g = j.at("graph");
  r.graph = {g.at("n").get<int>(), g.at("edge_count").get<std::size_t>(),
             g.at("degree_multiset").get<std::vector<int>>(), g.at("graph6").get<std::string>()};

  const auto& s = j.at("spectral");
  r.spectral.nullity = s.at("nullity").get<int>();
  r.spectral.is_core = s.at("is_core").get<bool>();
  r.spectral.is_nut = s.at("is_nut").get<bool>();
  r.spectral.zero_is_main = s.at("zero_is_main").get<bool>();
  r.spectral.mult_plus1 = s.at("mult_plus1").get<int>();
  r.spectral.mult_minus1 = s.at("mult_minus1").get<int>();
  if (!s.at("full_kernel_vector").is_null()) r.spectral.full_kernel_vector = vector_from_json(s.at("full_kernel_vector"));

  const auto& c = j.at("class_c");
  r.class_c.core = c.at("core").get<bool>();
  r.class_c.zero_main = c.at("zero_main").get<bool>();
  r.class_c.vertex_triangle = c.at("vertex_triangle").get<bool>();
  r.class_c.edge_triangle = c.at("edge_triangle").get<bool>();
  r.class_c.non_regular = c.at("non_regular").get<bool>();
  r.class_c.connected = c.at("connected").get<bool>();
  r.class_c.non_bipartite = c.at("non_bipartite").get<bool>();
  r.class_c.diameter_2_or_3 = c.at("diameter_2_or_3").get<bool>();
  r.class_c.in_class_c = c.at("in_class_c").get<bool>();

  if (!j.at("ack").is_null()) r.ack = ack_report_from_json(j.at("ack"));
  if (!j.at("oracle").is_null()) r.oracle = ack_report_from_json(j.at("oracle"));
  if (!j.at("oracle_agrees").is_null()) r.oracle_agrees = j.at("oracle_agrees").get<bool>();
  if (j.contains("timings_ms"))
    for (const auto& [phase, ms] : j.at("timings_ms").items()) r.timings_ms[phase] = ms.get<double>();
  return r;
}

std::string emit_report(const Report& r) { return to_json(r).dump(2) + "\n"; }

Report parse_report(std::string_view text) { return report_from_json(Json::parse(text)); }

}  // namespace ackkit
