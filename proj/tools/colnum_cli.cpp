// Copyright 2026 The colnum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// colnum command-line tool. Every subcommand prints one JSON report on
// stdout (or a derived text view with --pretty) and exits with
//   0 ok, 1 check failed, 2 input error, 3 resource cap.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "colnum/colnum.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct GraphDeleter {
  void operator()(colnum_graph* g) const { colnum_graph_free(g); }
};
struct OrderingDeleter {
  void operator()(colnum_ordering* o) const { colnum_ordering_free(o); }
};
using GraphPtr = std::unique_ptr<colnum_graph, GraphDeleter>;
using OrderingPtr = std::unique_ptr<colnum_ordering, OrderingDeleter>;

// Carries a library status out of a subcommand.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(colnum_status s) {
  switch (s) {
    case COLNUM_OK:
      return kExitOk;
    case COLNUM_CHECK_FAILED:
      return kExitCheckFailed;
    case COLNUM_INPUT_ERROR:
      return kExitInput;
    case COLNUM_RESOURCE_CAP:
      return kExitCap;
    default:
      return kExitInput;
  }
}

void check(colnum_status s) {
  if (s != COLNUM_OK) throw Failure{exit_code_for(s), colnum_last_error()};
}

Json take_json(char* s) {
  if (!s) return Json();
  Json j = Json::parse(s);
  colnum_string_free(s);
  return j;
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  colnum_string_free(s);
  return out;
}

GraphPtr load_graph(const std::string& path) {
  colnum_graph* g = nullptr;
  colnum_status s = colnum_graph_read(path.c_str(), &g);
  if (s != COLNUM_OK) throw Failure{exit_code_for(s), colnum_last_error()};
  return GraphPtr(g);
}

std::vector<std::uint32_t> sequence_of(const colnum_ordering* o) {
  std::vector<std::uint32_t> seq(colnum_ordering_size(o));
  colnum_ordering_sequence(o, seq.data());
  return seq;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kExitInput, "cannot write " + path};
  out << content;
  if (!out) throw Failure{kExitInput, "cannot write " + path};
}

std::string ordering_text(const std::vector<std::uint32_t>& seq) {
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(seq[i]);
  }
  return s + "\n";
}

// "1,2,inf" -> radii; "inf" maps to COLNUM_RADIUS_INF.
std::vector<unsigned> parse_radii(const std::vector<std::string>& items) {
  std::vector<unsigned> out;
  for (const auto& item : items) {
    if (item == "inf" || item == "infinity") {
      out.push_back(COLNUM_RADIUS_INF);
      continue;
    }
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v == 0 || v > 1000000)
      throw Failure{kExitInput, "invalid radius \"" + item + "\" (positive integer or inf)"};
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

std::size_t exact_cap_from_env(std::size_t fallback) {
  const char* env = std::getenv("COLNUM_CAP");
  if (!env || !*env) return fallback;
  std::string s = env;
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || v == 0) throw Failure{kExitInput, "COLNUM_CAP must be a positive integer"};
  return v;
}

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// --- text view -------------------------------------------------------------

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool is_flat_object(const Json& j) {
  if (!j.is_object()) return false;
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) return false;
    if (v.is_array())
      for (const auto& e : v)
        if (e.is_structured()) return false;
  }
  return true;
}

bool is_table(const Json& arr) {
  if (!arr.is_array() || arr.empty()) return false;
  for (const auto& e : arr)
    if (!is_flat_object(e) || e.size() != arr.front().size()) return false;
  return true;
}

void render(std::ostream& os, const Json& j, int indent);

void render_table(std::ostream& os, const Json& arr, int indent) {
  std::vector<std::string> cols;
  for (const auto& [k, v] : arr.front().items()) cols.push_back(k);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& e : arr) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::string cell = e.contains(cols[c]) ? scalar_text(e[cols[c]]) : "";
      width[c] = std::max(width[c], cell.size());
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  auto line = [&](const std::vector<std::string>& cells) {
    os << std::string(indent, ' ');
    for (std::size_t c = 0; c + 1 < cells.size(); ++c)
      os << std::left << std::setw(static_cast<int>(width[c]) + 2) << cells[c];
    if (!cells.empty()) os << cells.back();
    os << "\n";
  };
  line(cols);
  for (const auto& row : rows) line(row);
}

void render(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      render(os, value, indent + 2);
    } else if (is_table(value)) {
      os << pad << key << ":\n";
      render_table(os, value, indent + 2);
    } else if (value.is_array() && std::any_of(value.begin(), value.end(), [](const Json& e) { return e.is_structured(); })) {
      os << pad << key << ":\n";
      std::size_t idx = 0;
      for (const auto& e : value) {
        os << pad << "  [" << idx++ << "]\n";
        if (e.is_object()) {
          render(os, e, indent + 4);
        } else {
          os << pad << "    " << e.dump() << "\n";
        }
      }
    } else {
      os << pad << key << ": " << scalar_text(value) << "\n";
    }
  }
}

// --- subcommands -----------------------------------------------------------

struct Global {
  bool pretty = false;
  bool no_timestamp = false;
  std::string output;
};

struct EvalArgs {
  std::string graph, ordering;
  std::vector<std::string> radii{"1"};
  std::vector<std::string> kinds{"weak", "strong", "adm"};
  std::size_t budget = 1'000'000;
};

struct ExactArgs {
  std::string graph;
  std::vector<std::string> radii;
  std::vector<std::string> kinds;
  std::optional<std::size_t> cap;
  bool tw = false, td = false;
  std::string witness_out;
};

struct UniformArgs {
  std::vector<std::string> inputs;
  bool dyadic = false, multi = false;
  std::string eps;
  std::vector<std::string> radii;
  std::string sigma = "degeneracy";
  std::string tie_break = "deterministic";
  std::uint64_t seed = 0;
  bool audit = false;
  std::optional<std::size_t> cap;
  std::string sigma_out;
};

struct ExampleArgs {
  unsigned t = 0, n = 0, r = 0, r_prime = 0;
  bool verify = false;
  std::size_t samples = 100;
  std::uint64_t seed = 7;
  std::string graph_out, labels_out;
};

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 7;
};

std::pair<Json, int> cmd_eval(const EvalArgs& a) {
  GraphPtr g = load_graph(a.graph);
  colnum_ordering* o = nullptr;
  colnum_status s = colnum_ordering_read(a.ordering.c_str(), colnum_graph_vertex_count(g.get()), &o);
  if (s != COLNUM_OK) throw Failure{exit_code_for(s), colnum_last_error()};
  OrderingPtr ord(o);
  Json reports = Json::array();
  for (unsigned r : parse_radii(a.radii)) {
    for (const auto& kind : a.kinds) {
      char* json = nullptr;
      check(colnum_eval(g.get(), ord.get(), r, kind.c_str(), a.budget, nullptr, &json));
      reports.push_back(take_json(json));
    }
  }
  Json out;
  out["n"] = colnum_graph_vertex_count(g.get());
  out["m"] = colnum_graph_edge_count(g.get());
  out["reports"] = std::move(reports);
  return {out, kExitOk};
}

std::pair<Json, int> cmd_exact(const ExactArgs& a) {
  GraphPtr g = load_graph(a.graph);
  const std::size_t cap = a.cap ? *a.cap : exact_cap_from_env(0);
  Json out;
  out["n"] = colnum_graph_vertex_count(g.get());
  out["m"] = colnum_graph_edge_count(g.get());
  std::vector<std::string> radii = a.radii;
  std::vector<std::string> kinds = a.kinds;
  if (radii.empty() && !kinds.empty()) radii = {"1"};
  if (kinds.empty() && !radii.empty()) kinds = {"weak", "strong", "adm"};
  if (radii.empty() && !a.tw && !a.td) {
    radii = {"1"};
    kinds = {"weak", "strong", "adm"};
  }
  Json results = Json::array();
  std::vector<std::uint32_t> last_witness;
  for (unsigned r : parse_radii(radii)) {
    for (const auto& kind : kinds) {
      char* json = nullptr;
      colnum_ordering* w = nullptr;
      check(colnum_exact(g.get(), r, kind.c_str(), cap, nullptr, &w, &json));
      OrderingPtr wit(w);
      last_witness = sequence_of(wit.get());
      results.push_back(take_json(json));
    }
  }
  if (!results.empty()) out["results"] = std::move(results);
  if (a.tw) {
    std::size_t tw = 0;
    check(colnum_treewidth(g.get(), cap, &tw));
    out["treewidth"] = tw;
  }
  if (a.td) {
    std::size_t td = 0;
    check(colnum_treedepth(g.get(), cap, &td));
    out["treedepth"] = td;
  }
  if (!a.witness_out.empty()) {
    if (last_witness.empty() && colnum_graph_vertex_count(g.get()) > 0)
      throw Failure{kExitInput, "--witness-out needs at least one --r/--kind evaluation"};
    write_file(a.witness_out, ordering_text(last_witness));
  }
  return {out, kExitOk};
}

std::pair<Json, int> cmd_uniform(const UniformArgs& a) {
  const int modes = int(a.dyadic) + int(a.multi) + int(!a.eps.empty());
  if (modes > 1) throw Failure{kExitInput, "choose at most one of --dyadic, --eps, --multi"};
  colnum_uniform_options opts{a.tie_break.c_str(), a.seed, a.audit ? 1 : 0,
                              a.cap ? *a.cap : exact_cap_from_env(0)};
  char* json = nullptr;
  colnum_ordering* star = nullptr;
  colnum_status s;
  if (modes == 0) {
    if (a.inputs.size() != 1) throw Failure{kExitInput, "instance mode takes exactly one JSON file"};
    std::ifstream in(a.inputs[0], std::ios::binary);
    if (!in) throw Failure{kExitInput, "cannot open " + a.inputs[0]};
    std::stringstream buf;
    buf << in.rdbuf();
    s = colnum_uniform_instance(buf.str().c_str(), &opts, &star, &json);
  } else {
    std::vector<GraphPtr> graphs;
    std::vector<const colnum_graph*> raw;
    for (const auto& path : a.inputs) {
      graphs.push_back(load_graph(path));
      raw.push_back(graphs.back().get());
    }
    std::vector<unsigned> radii;
    const char* mode = a.dyadic ? "dyadic" : a.multi ? "multi" : "eps";
    if (a.multi) {
      radii = parse_radii(a.radii);
      if (radii.size() == 1 && raw.size() > 1) radii.assign(raw.size(), radii.front());
      if (radii.size() != raw.size()) throw Failure{kExitInput, "--multi needs one radius per graph (or a single one)"};
    }
    s = colnum_uniform_graphs(mode, raw.data(), radii.empty() ? nullptr : radii.data(), raw.size(),
                              a.eps.empty() ? nullptr : a.eps.c_str(), a.sigma.c_str(), &opts, &star, &json);
  }
  if (s != COLNUM_OK && s != COLNUM_CHECK_FAILED) throw Failure{exit_code_for(s), colnum_last_error()};
  OrderingPtr sigma_star(star);
  Json report = take_json(json);
  if (!a.sigma_out.empty() && sigma_star) write_file(a.sigma_out, ordering_text(sequence_of(sigma_star.get())));
  return {report, s == COLNUM_OK ? kExitOk : kExitCheckFailed};
}

std::pair<Json, int> cmd_example21(const ExampleArgs& a) {
  colnum_graph* g = nullptr;
  char* labels = nullptr;
  check(colnum_example21(a.t, a.n, a.r, a.r_prime, &g, &labels));
  GraphPtr graph(g);
  std::string labels_text = take_string(labels);
  Json out;
  out["params"] = {{"t", a.t}, {"n", a.n}, {"r", a.r}, {"r_prime", a.r_prime}};
  out["vertices"] = colnum_graph_vertex_count(graph.get());
  out["edges"] = colnum_graph_edge_count(graph.get());
  if (!a.graph_out.empty()) {
    char* text = nullptr;
    check(colnum_graph_serialize(graph.get(), &text));
    write_file(a.graph_out, take_string(text));
    out["graph_file"] = a.graph_out;
  }
  if (!a.labels_out.empty()) {
    write_file(a.labels_out, Json::parse(labels_text).dump(2) + "\n");
    out["labels_file"] = a.labels_out;
  }
  int code = kExitOk;
  if (a.verify) {
    char* json = nullptr;
    colnum_status s = colnum_example21_verify(a.t, a.n, a.r, a.r_prime, a.samples, a.seed, &json);
    if (s != COLNUM_OK && s != COLNUM_CHECK_FAILED) throw Failure{exit_code_for(s), colnum_last_error()};
    Json v = take_json(json);
    v.erase("vertices");
    v.erase("edges");
    v["samples"] = a.samples;
    v["seed"] = a.seed;
    out["verify"] = std::move(v);
    code = exit_code_for(s);
  }
  return {out, code};
}

std::pair<Json, int> cmd_verify(const VerifyArgs& a) {
  char* json = nullptr;
  colnum_status s = colnum_verify_suite(a.suite.c_str(), a.seed, &json);
  if (s != COLNUM_OK && s != COLNUM_CHECK_FAILED) throw Failure{exit_code_for(s), colnum_last_error()};
  return {take_json(json), exit_code_for(s)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized coloring numbers: evaluation, exact search, uniform orderings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(colnum_version()));
  Global global;
  app.add_flag("--pretty", global.pretty, "Print a text view instead of JSON");
  app.add_flag("--no-timestamp", global.no_timestamp, "Omit the timestamp field from the report");
  app.add_option("-o,--output", global.output, "Write the report to a file instead of stdout");

  EvalArgs eval;
  auto* c_eval = app.add_subcommand("eval", "Reachability numbers of a fixed ordering");
  c_eval->add_option("graph", eval.graph, "Graph file")->required();
  c_eval->add_option("ordering", eval.ordering, "Ordering file")->required();
  c_eval->add_option("--r", eval.radii, "Radii (integers or inf)")->delimiter(',');
  c_eval->add_option("--kind", eval.kinds, "weak, strong, adm")->delimiter(',');
  c_eval->add_option("--budget", eval.budget, "Path-packing budget for adm")->check(CLI::PositiveNumber);

  ExactArgs exact;
  auto* c_exact = app.add_subcommand("exact", "Optimum over all orderings, treewidth and treedepth oracles");
  c_exact->add_option("graph", exact.graph, "Graph file")->required();
  c_exact->add_option("--r", exact.radii, "Radii (integers or inf)")->delimiter(',');
  c_exact->add_option("--kind", exact.kinds, "weak, strong, adm")->delimiter(',');
  c_exact->add_option("--cap", exact.cap, "Vertex cap (default 10, or COLNUM_CAP)")->check(CLI::PositiveNumber);
  c_exact->add_flag("--tw", exact.tw, "Treewidth oracle");
  c_exact->add_flag("--td", exact.td, "Treedepth oracle");
  c_exact->add_option("--witness-out", exact.witness_out, "Write the last witness ordering here");

  UniformArgs uni;
  auto* c_uni = app.add_subcommand("uniform", "Collecting walk on an instance or on graphs");
  c_uni->add_option("inputs", uni.inputs, "Instance JSON, or graph file(s) with a mode flag")->required();
  c_uni->add_flag("--dyadic", uni.dyadic, "Single graph, all radii, weights 2^(k-i)");
  c_uni->add_option("--eps", uni.eps, "Single graph, eps weights (e.g. 1/2, 0.5)");
  c_uni->add_flag("--multi", uni.multi, "Several graphs, all weights 1");
  c_uni->add_option("--r", uni.radii, "Radii for --multi")->delimiter(',');
  c_uni->add_option("--sigma", uni.sigma, "Layer ordering source")->check(CLI::IsMember({"exact", "degeneracy"}));
  c_uni->add_option("--tie-break", uni.tie_break, "deterministic or random")
      ->check(CLI::IsMember({"deterministic", "random"}));
  c_uni->add_option("--seed", uni.seed, "Seed for --tie-break random");
  c_uni->add_flag("--audit", uni.audit, "Add the X1/X2/X3 audit");
  c_uni->add_option("--cap", uni.cap, "Vertex cap for --sigma exact")->check(CLI::PositiveNumber);
  c_uni->add_option("--sigma-out", uni.sigma_out, "Write the collected ordering here");

  ExampleArgs ex;
  auto* c_ex = app.add_subcommand("example21", "Counterexample family with no good ordering for two radii");
  c_ex->add_option("t", ex.t)->required();
  c_ex->add_option("n", ex.n)->required();
  c_ex->add_option("r", ex.r)->required();
  c_ex->add_option("r_prime", ex.r_prime)->required();
  c_ex->add_flag("--verify", ex.verify, "Check facts and claims");
  c_ex->add_option("--samples", ex.samples, "Random orderings for claim 3");
  c_ex->add_option("--seed", ex.seed, "Seed for the sampled orderings");
  c_ex->add_option("--graph-out", ex.graph_out, "Write the edge list here");
  c_ex->add_option("--labels-out", ex.labels_out, "Write the label map here");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "Run a verification suite");
  c_ver->add_option("suite", ver.suite, "oracle, sandwich, prop11, thm41, thm13, thm15, cor43, example21, all");
  c_ver->add_option("--seed", ver.seed, "Battery seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
    app.exit(e);
    return kExitInput;
  }

  std::string command;
  std::pair<Json, int> result;
  try {
    if (c_eval->parsed()) {
      command = "eval";
      result = cmd_eval(eval);
    } else if (c_exact->parsed()) {
      command = "exact";
      result = cmd_exact(exact);
    } else if (c_uni->parsed()) {
      command = "uniform";
      result = cmd_uniform(uni);
    } else if (c_ex->parsed()) {
      command = "example21";
      result = cmd_example21(ex);
    } else {
      command = "verify";
      result = cmd_verify(ver);
    }
  } catch (const Failure& f) {
    std::cerr << "colnum: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "colnum: " << e.what() << "\n";
    return kExitInput;
  }

  Json report;
  report["command"] = command;
  report["version"] = colnum_version();
  if (!global.no_timestamp) report["timestamp"] = utc_timestamp();
  report["exit_code"] = result.second;
  report["result"] = std::move(result.first);

  std::ostringstream text;
  if (global.pretty) {
    render(text, report, 0);
  } else {
    text << report.dump(2) << "\n";
  }
  if (global.output.empty()) {
    std::cout << text.str();
  } else {
    try {
      write_file(global.output, text.str());
    } catch (const Failure& f) {
      std::cerr << "colnum: " << f.message << "\n";
      return f.exit_code;
    }
  }
  return result.second;
}
