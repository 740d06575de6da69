// ackkit command-line tool. Talks to the library only through ackkit.h; all
// human-readable output is rendered from the JSON the library returns.

#include "ackkit/ackkit.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kInternal = 1, kInputError = 2, kNoWitness = 3, kAborted = 4 };

struct GraphDeleter {
  void operator()(ackkit_graph* g) const { ackkit_graph_free(g); }
};
using GraphHandle = std::unique_ptr<ackkit_graph, GraphDeleter>;

struct CString {
  char* p = nullptr;
  ~CString() { ackkit_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Failure {
  int code;
  std::string message;
};

void check(ackkit_status st) {
  if (st == ACKKIT_OK) return;
  throw Failure{st == ACKKIT_ERR_INTERNAL ? kInternal : kInputError, ackkit_last_error()};
}

GraphHandle load(const std::string& spec) {
  ackkit_graph* g = nullptr;
  check(ackkit_graph_load(spec.c_str(), &g));
  return GraphHandle(g);
}

int default_limit_n() {
  ackkit_verify_options o;
  ackkit_verify_options_init(&o);
  if (const char* env = std::getenv("ACKKIT_LIMIT_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Failure{kInputError, std::string("ACKKIT_LIMIT_N is not an integer: ") + env};
    }
  }
  return o.limit_n;
}

// "p/1" prints as "p" in human output.
std::string rational(const std::string& s) { return s.ends_with("/1") ? s.substr(0, s.size() - 2) : s; }

std::string vector_text(const Json& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + rational(v[i].get<std::string>());
  return out + ")";
}

std::string set_text(const Json& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i].get<int>());
  return out + "}";
}

std::string yes_no(const Json& b) { return b.get<bool>() ? "yes" : "no"; }

std::string ack_text(const Json& a) {
  std::ostringstream out;
  out << a["status"].get<std::string>();
  if (!a["witness"].is_null()) out << " " << set_text(a["witness"]);
  out << " via " << a["method"].get<std::string>() << ", " << a["checked_count"].get<std::uint64_t>() << " subsets";
  return out.str();
}

void render_report(const Json& r, std::ostream& out) {
  const auto& g = r["graph"];
  const auto& s = r["spectral"];
  const auto& c = r["class_c"];
  out << "input      " << r["input"]["kind"].get<std::string>() << " " << r["input"]["source"].get<std::string>() << "\n";
  out << "graph      n=" << g["n"] << " edges=" << g["edge_count"] << " graph6=" << g["graph6"].get<std::string>() << "\n";
  out << "degrees   ";
  for (const auto& d : g["degree_multiset"]) out << " " << d;
  out << "\n";
  out << "nullity    " << s["nullity"] << "  core " << yes_no(s["is_core"]) << "  nut " << yes_no(s["is_nut"])
      << "  zero main " << yes_no(s["zero_is_main"]) << "\n";
  out << "eigen +1   multiplicity " << s["mult_plus1"] << "\n";
  out << "eigen -1   multiplicity " << s["mult_minus1"] << "\n";
  if (!s["full_kernel_vector"].is_null()) out << "kernel     " << vector_text(s["full_kernel_vector"]) << "\n";
  out << "class C    " << yes_no(c["in_class_c"]);
  if (!c["failed"].empty()) {
    out << " (fails";
    for (const auto& f : c["failed"]) out << " " << f.get<std::string>();
    out << ")";
  }
  out << "\n";
  if (!r["ack"].is_null()) out << "ack        " << ack_text(r["ack"]) << "\n";
  if (!r["oracle"].is_null()) {
    out << "oracle     " << ack_text(r["oracle"]);
    if (!r["oracle_agrees"].is_null()) out << (r["oracle_agrees"].get<bool>() ? "  (agrees)" : "  (DISAGREES)");
    out << "\n";
  }
  if (r.contains("timings_ms"))
    for (const auto& [phase, ms] : r["timings_ms"].items()) out << "time       " << phase << " " << ms.get<double>() << " ms\n";
}

void render_classify(const Json& r, std::ostream& out) {
  const auto& c = r["class_c"];
  out << "input      " << r["input"]["source"].get<std::string>() << "\n";
  for (const char* key : {"core", "zero_main", "vertex_triangle", "edge_triangle", "non_regular", "connected",
                          "non_bipartite", "diameter_2_or_3"})
    out << "  " << key << std::string(18 - std::string(key).size(), ' ') << yes_no(c[key]) << "\n";
  out << "in_class_c          " << yes_no(c["in_class_c"]) << "\n";
}

int ack_exit_code(const std::string& status) {
  if (status == "WITNESS_FOUND") return kOk;
  if (status == "NO_WITNESS") return kNoWitness;
  return kAborted;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Failure{kInputError, "cannot write '" + path + "'"};
}

// "3,5;13,15" -> [[3,5],[13,15]]
Json parse_sets(const std::string& text) {
  Json sets = Json::array();
  std::istringstream groups(text);
  for (std::string group; std::getline(groups, group, ';');) {
    Json set = Json::array();
    std::istringstream items(group);
    for (std::string item; std::getline(items, item, ',');) {
      try {
        set.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw Failure{kInputError, "bad vertex '" + item + "' in '" + text + "'"};
      }
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

struct ConstructArgs {
  std::string family;
  std::optional<int> k, n, i, j, limit_n;
  std::string name, base, sets, plan, subset, out, format = "graph6";
  bool json = false;
};

int cmd_construct(const ConstructArgs& a) {
  Json params = Json::object();
  if (a.k) params["k"] = *a.k;
  if (a.n) params["n"] = *a.n;
  if (a.i) params["i"] = *a.i;
  if (a.j) params["j"] = *a.j;
  if (!a.name.empty()) params["name"] = a.name;
  if (!a.base.empty()) params["base"] = a.base;
  if (!a.sets.empty()) params["sets"] = parse_sets(a.sets);
  if (!a.subset.empty()) params["subset"] = parse_sets(a.subset).at(0);
  if (!a.plan.empty()) {
    Json plan = Json::array();
    for (const auto& step : parse_sets(a.plan)) {
      if (step.size() != 2) throw Failure{kInputError, "plan steps are 'vertex,multiplicity' separated by ';'"};
      plan.push_back(step);
    }
    params["plan"] = plan;
  }
  params["limit_n"] = a.limit_n.value_or(default_limit_n());

  ackkit_graph* raw = nullptr;
  CString summary_text;
  check(ackkit_construct(a.family.c_str(), params.dump().c_str(), &raw, &summary_text.p));
  GraphHandle g(raw);
  const Json summary = Json::parse(summary_text.str());

  CString graph_text;
  check(ackkit_graph_emit(g.get(), a.format.c_str(), &graph_text.p));
  if (!a.out.empty()) write_file(a.out, graph_text.str());

  if (a.json) {
    std::cout << summary.dump(2) << "\n";
  } else {
    std::cout << "family     " << a.family << " " << params.dump() << "\n";
    std::cout << "graph      n=" << summary["n"] << " edges=" << summary["edge_count"]
              << " graph6=" << summary["graph6"].get<std::string>() << "\n";
    for (const auto& v : summary["certified_kernel_vectors"]) std::cout << "kernel     " << vector_text(v) << "\n";
    for (const auto& v : summary["derived_vectors"]) std::cout << "derived    " << vector_text(v) << "\n";
    for (const auto& c : summary["checks"])
      std::cout << "check      " << (c["passed"].get<bool>() ? "pass " : "FAIL ") << c["name"].get<std::string>() << "\n";
    if (!summary["ack"].is_null()) std::cout << "ack        " << ack_text(summary["ack"]) << "\n";
    if (!a.out.empty()) std::cout << "wrote      " << a.out << "\n";
    if (a.out.empty()) std::cout << graph_text.str();
  }
  return kOk;
}

struct VerifyArgs {
  std::string spec;
  bool oracle = false, json = false, timings = false, no_degree_filter = false;
  std::optional<int> limit_n, oracle_limit_n;
};

int cmd_verify(const VerifyArgs& a) {
  auto g = load(a.spec);
  ackkit_verify_options o;
  ackkit_verify_options_init(&o);
  o.limit_n = a.limit_n.value_or(default_limit_n());
  o.degree_filter = a.no_degree_filter ? 0 : 1;
  o.oracle = a.oracle ? 1 : 0;
  if (a.oracle_limit_n) o.oracle_limit_n = *a.oracle_limit_n;
  o.timings = a.timings ? 1 : 0;

  CString text;
  check(ackkit_verify(g.get(), &o, &text.p, nullptr));
  const Json report = Json::parse(text.str());
  if (a.json)
    std::cout << text.str();
  else
    render_report(report, std::cout);

  if (a.oracle && !report["oracle_agrees"].is_null() && !report["oracle_agrees"].get<bool>()) {
    std::cerr << "error: witness search and brute-force oracle disagree\n";
    return kInternal;
  }
  return ack_exit_code(report["ack"]["status"].get<std::string>());
}

int cmd_classify(const std::string& spec, bool json) {
  auto g = load(spec);
  CString text;
  check(ackkit_classify(g.get(), &text.p));
  if (json)
    std::cout << text.str();
  else
    render_classify(Json::parse(text.str()), std::cout);
  return kOk;
}

struct BatchArgs {
  std::string dir, json_out;
  int parallel = 1;
  std::optional<int> limit_n;
  bool json = false;
};

int cmd_batch(const BatchArgs& a) {
  CString text;
  check(ackkit_batch_run(a.dir.c_str(), a.parallel, a.limit_n.value_or(default_limit_n()),
                         a.json_out.empty() ? nullptr : a.json_out.c_str(), &text.p));
  const Json summary = Json::parse(text.str());
  if (a.json) {
    std::cout << text.str();
  } else {
    for (const auto& f : summary["files"]) {
      std::cout << f["file"].get<std::string>() << "  ";
      if (!f["ok"].get<bool>()) {
        std::cout << "FAILED  " << f["error"].get<std::string>() << "\n";
        continue;
      }
      std::cout << "n=" << f["n"] << " nullity=" << f["nullity"] << " class_c=" << yes_no(f["in_class_c"]) << "  "
                << f["ack_status"].get<std::string>();
      if (!f["witness"].is_null()) std::cout << " " << set_text(f["witness"]);
      std::cout << "\n";
    }
    const auto& t = summary["totals"];
    std::cout << "total " << t["files"] << ", failed " << t["failed"] << ", witness " << t["witness_found"]
              << ", no witness " << t["no_witness"] << ", aborted " << t["aborted"] << "\n";
  }
  const auto& t = summary["totals"];
  if (t["failed"].get<int>() > 0) return kInputError;
  if (t["no_witness"].get<int>() > 0) return kNoWitness;
  if (t["aborted"].get<int>() > 0) return kAborted;
  return kOk;
}

int cmd_catalog_list() {
  for (std::size_t i = 0; i < ackkit_catalog_size(); ++i) {
    const char* name = ackkit_catalog_name(i);
    CString info;
    check(ackkit_catalog_info(name, &info.p));
    const Json j = Json::parse(info.str());
    std::cout << name << "  n=" << j["n"] << " edges=" << j["edge_count"] << " nullity=" << j["expected_nullity"]
              << "  " << j["notes"].get<std::string>() << "\n";
  }
  return kOk;
}

int cmd_catalog_show(const std::string& name, bool json) {
  CString info;
  check(ackkit_catalog_info(name.c_str(), &info.p));
  if (json) {
    std::cout << info.str();
    return kOk;
  }
  const Json j = Json::parse(info.str());
  std::cout << j["name"].get<std::string>() << "  n=" << j["n"] << " edges=" << j["edge_count"]
            << " nullity=" << j["expected_nullity"] << "\n" << j["notes"].get<std::string>() << "\n";
  for (const auto& v : j["expected_kernel"]) std::cout << "kernel     " << vector_text(v) << "\n";
  auto g = load("catalog:" + name);
  CString edges;
  check(ackkit_graph_emit(g.get(), "edgelist", &edges.p));
  std::cout << edges.str();
  return kOk;
}

int cmd_catalog_export(const std::string& dir, const std::string& format) {
  std::filesystem::create_directories(dir);
  const std::string ext = format == "graph6" ? ".g6" : ".edges";
  for (std::size_t i = 0; i < ackkit_catalog_size(); ++i) {
    const std::string name = ackkit_catalog_name(i);
    auto g = load("catalog:" + name);
    CString text;
    check(ackkit_graph_emit(g.get(), format.c_str(), &text.p));
    const auto path = (std::filesystem::path(dir) / (name + ext)).string();
    write_file(path, text.str());
    std::cout << path << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for the ACK conjecture on graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ackkit_version()));

  int code = kOk;
  const auto formats = CLI::IsMember({"graph6", "edgelist"});

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a graph from a family or construction and certify it");
  construct->add_option("family", ca.family,
                        "satellite, catalog, cycle, path, complete, k2_product, add_vertex_dominating, "
                        "nut_extension, multi_attach, duplicate_vertices")
      ->required();
  construct->add_option("--k", ca.k, "satellite parameter");
  construct->add_option("--n", ca.n, "order for cycle, path, complete");
  construct->add_option("--name", ca.name, "catalog graph name");
  construct->add_option("--base", ca.base, "input graph (catalog:NAME or file)");
  construct->add_option("--sets", ca.sets, "vertex sets, e.g. \"3,5;13,15\"");
  construct->add_option("--i", ca.i, "first attachment vertex (nut_extension)");
  construct->add_option("--j", ca.j, "second attachment vertex (nut_extension)");
  construct->add_option("--plan", ca.plan, "duplication plan, e.g. \"1,1;5,2\"");
  construct->add_option("--subset", ca.subset, "zero-sum subset for duplicate_vertices, e.g. \"2,3\"");
  construct->add_option("--limit-n", ca.limit_n, "witness search limit");
  construct->add_option("--out", ca.out, "write the graph here instead of stdout");
  construct->add_option("--format", ca.format, "graph6 or edgelist")->check(formats);
  construct->add_flag("--json", ca.json, "print the certification summary as JSON");
  construct->callback([&] { code = cmd_construct(ca); });

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "search for an ACK witness and report the spectral profile");
  verify->add_option("graph", va.spec, "catalog:NAME, satellite:K, cycle:N, path:N, complete:N or a file")->required();
  verify->add_flag("--oracle", va.oracle, "cross-check with the brute-force oracle");
  verify->add_option("--oracle-limit-n", va.oracle_limit_n, "largest n the oracle will search");
  verify->add_option("--limit-n", va.limit_n, "witness search limit (default from ACKKIT_LIMIT_N or 24)");
  verify->add_flag("--no-degree-filter", va.no_degree_filter, "compare rows for every subset size");
  verify->add_flag("--json", va.json, "print the JSON report");
  verify->add_flag("--timings", va.timings, "include per-phase timings");
  verify->callback([&] { code = cmd_verify(va); });

  std::string classify_spec;
  bool classify_json = false;
  auto* classify = app.add_subcommand("classify", "evaluate the eight necessary conditions for a counterexample");
  classify->add_option("graph", classify_spec, "catalog:NAME or a file")->required();
  classify->add_flag("--json", classify_json, "print the JSON report");
  classify->callback([&] { code = cmd_classify(classify_spec, classify_json); });

  BatchArgs ba;
  auto* batch = app.add_subcommand("batch", "verify every .g6/.graph6/.edges file in a directory");
  batch->add_option("dir", ba.dir)->required()->check(CLI::ExistingDirectory);
  batch->add_option("--parallel", ba.parallel, "worker threads")->check(CLI::Range(1, 256));
  batch->add_option("--json-out", ba.json_out, "directory for per-file reports and summary.json");
  batch->add_option("--limit-n", ba.limit_n, "witness search limit");
  batch->add_flag("--json", ba.json, "print summary JSON");
  batch->callback([&] { code = cmd_batch(ba); });

  auto* cat = app.add_subcommand("catalog", "list, show or export the built-in example graphs");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list catalog graphs")->callback([&] { code = cmd_catalog_list(); });
  std::string show_name;
  bool show_json = false;
  auto* show = cat->add_subcommand("show", "show one catalog graph");
  show->add_option("name", show_name)->required();
  show->add_flag("--json", show_json);
  show->callback([&] { code = cmd_catalog_show(show_name, show_json); });
  std::string export_dir, export_format = "graph6";
  auto* exp = cat->add_subcommand("export", "write every catalog graph to a directory");
  exp->add_option("dir", export_dir)->required();
  exp->add_option("--format", export_format, "graph6 or edgelist")->check(formats);
  exp->callback([&] { code = cmd_catalog_export(export_dir, export_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return code;
}
