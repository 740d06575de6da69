#include "ackkit/ackkit.h"

#include "ackkit/batch.hpp"
#include "ackkit/constructions.hpp"
#include "ackkit/report.hpp"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>

struct ackkit_graph {
  ackkit::Graph graph;
  ackkit::InputProvenance input;
};

namespace {

using ackkit::Json;

thread_local std::string last_error;

ackkit_status fail(ackkit_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Translates the exception in flight into a status code.
ackkit_status current_exception_status() {
  try {
    throw;
  } catch (const ackkit::PreconditionError& e) {
    return fail(ACKKIT_ERR_PRECONDITION, e.what());
  } catch (const ackkit::AckInputError& e) {
    return fail(ACKKIT_ERR_NO_EDGES, e.what());
  } catch (const ackkit::ParseError& e) {
    return fail(ACKKIT_ERR_PARSE, e.what());
  } catch (const ackkit::GraphError& e) {
    const std::string msg = e.what();
    return fail(msg.starts_with("cannot open") ? ACKKIT_ERR_IO : ACKKIT_ERR_INVALID_ARGUMENT, msg);
  } catch (const Json::exception& e) {
    return fail(ACKKIT_ERR_INVALID_ARGUMENT, std::string("bad parameters: ") + e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(ACKKIT_ERR_IO, e.what());
  } catch (const std::out_of_range& e) {
    return fail(ACKKIT_ERR_NOT_FOUND, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ACKKIT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ACKKIT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ACKKIT_ERR_INTERNAL, "unknown error");
  }
}

template <typename F>
ackkit_status guarded(F&& body) {
  try {
    body();
    return ACKKIT_OK;
  } catch (...) {
    return current_exception_status();
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, const char* what) {
  if (!condition) throw std::invalid_argument(what);
}

ackkit_graph* make_handle(ackkit::Graph g, ackkit::InputProvenance input) {
  return new ackkit_graph{std::move(g), std::move(input)};
}

Json vectors_json(const std::vector<ackkit::QVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(ackkit::to_string(x));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<ackkit::VertexSet> sets_param(const Json& params) {
  std::vector<ackkit::VertexSet> sets;
  for (const auto& s : params.at("sets")) sets.emplace_back(s.get<std::vector<int>>());
  return sets;
}

ackkit::AckOptions ack_param(const Json& params) {
  ackkit::AckOptions opts;
  if (params.contains("limit_n")) opts.limit_n = params.at("limit_n").get<int>();
  return opts;
}

ackkit::ConstructionResult run_construction(const std::string& family, const Json& params) {
  using namespace ackkit;
  auto base = [&] { return resolve_graph(params.at("base").get<std::string>()); };
  auto int_param = [&](const char* key) { return params.at(key).get<int>(); };

  if (family == "satellite") return satellite(int_param("k"));
  if (family == "catalog") {
    ConstructionResult r;
    const auto& entry = catalog(params.at("name").get<std::string>());
    r.graph = entry.graph;
    r.certified_kernel_vectors = entry.expected_kernel;
    return r;
  }
  if (family == "cycle" || family == "path" || family == "complete") {
    ConstructionResult r;
    const int n = int_param("n");
    r.graph = family == "cycle" ? cycle_graph(n) : family == "path" ? path_graph(n) : complete_graph(n);
    return r;
  }
  if (family == "k2_product") return k2_product_ack(base(), ack_param(params));
  if (family == "add_vertex_dominating") return add_vertex_dominating(base(), sets_param(params), ack_param(params));
  if (family == "nut_extension") return nut_extension(base(), int_param("i"), int_param("j"));
  if (family == "multi_attach") return multi_attach(base(), sets_param(params), ack_param(params));
  if (family == "duplicate_vertices") {
    std::vector<DuplicationStep> plan;
    for (const auto& step : params.at("plan")) plan.push_back({step.at(0).get<int>(), step.at(1).get<int>()});
    std::optional<VertexSet> subset;
    if (params.contains("subset")) subset = VertexSet(params.at("subset").get<std::vector<int>>());
    return duplicate_vertices(base(), plan, subset, ack_param(params));
  }
  throw std::out_of_range("unknown construction family '" + family + "'");
}

Json construction_summary(const std::string& family, const Json& params, const ackkit::ConstructionResult& r) {
  Json j;
  j["family"] = family;
  j["params"] = params;
  j["n"] = r.graph.order();
  j["edge_count"] = r.graph.edge_count();
  j["graph6"] = ackkit::emit_graph6(r.graph);
  j["certified_kernel_vectors"] = vectors_json(r.certified_kernel_vectors);
  Json checks = Json::array();
  bool all = true;
  for (const auto& c : r.hypothesis_report) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}});
    all = all && c.passed;
  }
  j["checks"] = std::move(checks);
  j["all_checks_passed"] = all;
  j["derived_vectors"] = vectors_json(r.derived_vectors);
  if (!r.origin.empty()) j["origin"] = r.origin;
  j["ack"] = r.ack ? ackkit::to_json(*r.ack) : Json(nullptr);
  return j;
}

}  // namespace

extern "C" {

const char* ackkit_last_error(void) { return last_error.c_str(); }

const char* ackkit_status_name(ackkit_status status) {
  switch (status) {
    case ACKKIT_OK: return "ok";
    case ACKKIT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ACKKIT_ERR_PARSE: return "parse error";
    case ACKKIT_ERR_IO: return "i/o error";
    case ACKKIT_ERR_PRECONDITION: return "precondition failed";
    case ACKKIT_ERR_NO_EDGES: return "graph has no edges";
    case ACKKIT_ERR_NOT_FOUND: return "not found";
    case ACKKIT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ackkit_version(void) { return "1.0.0"; }

void ackkit_string_free(char* s) { std::free(s); }

ackkit_status ackkit_graph_from_edges(int n, const int* pairs, size_t edge_count, ackkit_graph** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    require(pairs != nullptr || edge_count == 0, "pairs must not be NULL");
    std::vector<ackkit::Edge> edges;
    for (size_t e = 0; e < edge_count; ++e) edges.emplace_back(pairs[2 * e], pairs[2 * e + 1]);
    *out = make_handle(ackkit::Graph::from_edges(n, edges), {"construction", "edges"});
  });
}

ackkit_status ackkit_graph_parse(const char* text, const char* format, ackkit_graph** out) {
  return guarded([&] {
    require(text && format && out, "text, format and out must not be NULL");
    const std::string fmt = format;
    if (fmt == "graph6")
      *out = make_handle(ackkit::parse_graph6(text), {"file", "<graph6>"});
    else if (fmt == "edgelist")
      *out = make_handle(ackkit::parse_edge_list(text), {"file", "<edgelist>"});
    else
      throw std::invalid_argument("unknown format '" + fmt + "' (expected graph6 or edgelist)");
  });
}

ackkit_status ackkit_graph_load(const char* spec, ackkit_graph** out) {
  return guarded([&] {
    require(spec && out, "spec and out must not be NULL");
    *out = make_handle(ackkit::resolve_graph(spec), ackkit::provenance_for(spec));
  });
}

void ackkit_graph_free(ackkit_graph* g) { delete g; }

int ackkit_graph_order(const ackkit_graph* g) { return g ? g->graph.order() : 0; }

size_t ackkit_graph_edge_count(const ackkit_graph* g) { return g ? g->graph.edge_count() : 0; }

ackkit_status ackkit_graph_emit(const ackkit_graph* g, const char* format, char** out) {
  return guarded([&] {
    require(g && format && out, "graph, format and out must not be NULL");
    const std::string fmt = format;
    if (fmt == "graph6")
      *out = copy_string(ackkit::emit_graph6(g->graph) + "\n");
    else if (fmt == "edgelist")
      *out = copy_string(ackkit::emit_edge_list(g->graph));
    else
      throw std::invalid_argument("unknown format '" + fmt + "' (expected graph6 or edgelist)");
  });
}

size_t ackkit_catalog_size(void) {
  try {
    return ackkit::catalog_entries().size();
  } catch (...) {
    current_exception_status();
    return 0;
  }
}

const char* ackkit_catalog_name(size_t index) {
  try {
    const auto entries = ackkit::catalog_entries();
    return index < entries.size() ? entries[index].name.c_str() : nullptr;
  } catch (...) {
    current_exception_status();
    return nullptr;
  }
}

ackkit_status ackkit_catalog_info(const char* name, char** out_json) {
  return guarded([&] {
    require(name && out_json, "name and out_json must not be NULL");
    const auto& e = ackkit::catalog(name);
    Json j;
    j["name"] = e.name;
    j["n"] = e.graph.order();
    j["edge_count"] = e.graph.edge_count();
    j["expected_nullity"] = e.expected_nullity;
    j["expected_kernel"] = vectors_json(e.expected_kernel);
    j["notes"] = e.notes;
    *out_json = copy_string(j.dump(2) + "\n");
  });
}

ackkit_status ackkit_construct(const char* family, const char* params_json, ackkit_graph** out_graph,
                               char** out_summary_json) {
  return guarded([&] {
    require(family != nullptr, "family must not be NULL");
    const Json params = params_json && *params_json ? Json::parse(params_json) : Json::object();
    require(params.is_object(), "params must be a JSON object");
    auto result = run_construction(family, params);
    const auto summary = construction_summary(family, params, result);
    if (out_summary_json) *out_summary_json = copy_string(summary.dump(2) + "\n");
    if (out_graph) *out_graph = make_handle(std::move(result.graph), {"construction", family + (":" + params.dump())});
  });
}

void ackkit_verify_options_init(ackkit_verify_options* options) {
  if (!options) return;
  const ackkit::ReportOptions defaults;
  options->limit_n = defaults.ack.limit_n;
  options->degree_filter = defaults.ack.degree_filter ? 1 : 0;
  options->oracle = 0;
  options->oracle_limit_n = defaults.oracle_limit_n;
  options->timings = 0;
}

ackkit_status ackkit_verify(const ackkit_graph* g, const ackkit_verify_options* options, char** out_report_json,
                            int* out_ack_status) {
  return guarded([&] {
    require(g && out_report_json, "graph and out_report_json must not be NULL");
    ackkit_verify_options o;
    ackkit_verify_options_init(&o);
    if (options) o = *options;
    ackkit::ReportOptions ro;
    ro.ack.limit_n = o.limit_n;
    ro.ack.degree_filter = o.degree_filter != 0;
    ro.run_oracle = o.oracle != 0;
    ro.oracle_limit_n = o.oracle_limit_n;
    ro.include_timings = o.timings != 0;
    const auto report = ackkit::build_report(g->graph, g->input, ro);
    *out_report_json = copy_string(ackkit::emit_report(report));
    if (out_ack_status) *out_ack_status = static_cast<int>(report.ack->status);
  });
}

ackkit_status ackkit_classify(const ackkit_graph* g, char** out_report_json) {
  return guarded([&] {
    require(g && out_report_json, "graph and out_report_json must not be NULL");
    ackkit::ReportOptions ro;
    ro.run_ack = false;
    *out_report_json = copy_string(ackkit::emit_report(ackkit::build_report(g->graph, g->input, ro)));
  });
}

ackkit_status ackkit_batch_run(const char* dir, int workers, int limit_n, const char* json_out_dir,
                               char** out_summary_json) {
  return guarded([&] {
    require(dir && out_summary_json, "dir and out_summary_json must not be NULL");
    ackkit::BatchOptions bo;
    bo.workers = workers;
    bo.ack.limit_n = limit_n;
    if (json_out_dir) bo.json_out = std::filesystem::path(json_out_dir);
    *out_summary_json = copy_string(ackkit::run_batch(dir, bo).emit());
  });
}

}  // extern "C"
