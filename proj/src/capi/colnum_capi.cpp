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

#include "colnum/colnum.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "colnum/battery.hpp"
#include "colnum/error.hpp"
#include "colnum/exact.hpp"
#include "colnum/example21.hpp"
#include "colnum/graph.hpp"
#include "colnum/ordering.hpp"
#include "colnum/reach.hpp"
#include "colnum/report_json.hpp"
#include "colnum/uniform.hpp"

struct colnum_graph {
  colnum::Graph g;
};

struct colnum_ordering {
  colnum::Ordering o;
};

namespace {

thread_local std::string last_error;

colnum_status set_error(colnum_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

colnum_status from_code(colnum::ErrorCode code) {
  switch (code) {
    case colnum::ErrorCode::kInvalidInput:
      return COLNUM_INPUT_ERROR;
    case colnum::ErrorCode::kBudgetExceeded:
    case colnum::ErrorCode::kCapExceeded:
      return COLNUM_RESOURCE_CAP;
    case colnum::ErrorCode::kCheckFailed:
      return COLNUM_CHECK_FAILED;
  }
  return COLNUM_INTERNAL;
}

template <typename F>
colnum_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const colnum::Error& e) {
    return set_error(from_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(COLNUM_RESOURCE_CAP, "out of memory");
  } catch (const std::exception& e) {
    return set_error(COLNUM_INTERNAL, e.what());
  } catch (...) {
    return set_error(COLNUM_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put_json(char** out, const colnum::Json& j) {
  if (out) *out = dup_string(j.dump());
}

colnum::Radius to_radius(unsigned r) {
  return r == COLNUM_RADIUS_INF ? colnum::Radius::infinity() : colnum::Radius(r);
}

colnum::ReachKind to_kind(const char* kind) {
  if (!kind) colnum::throw_invalid("kind is null");
  auto k = colnum::parse_reach_kind(kind);
  if (!k) colnum::throw_invalid(std::string("unknown kind \"") + kind + "\"");
  return *k;
}

void require(const void* p, const char* what) {
  if (!p) colnum::throw_invalid(std::string(what) + " is null");
}

colnum::UniformOptions to_options(const colnum_uniform_options* opts) {
  colnum::UniformOptions o;
  if (!opts) return o;
  if (opts->tie_break) {
    std::string tb = opts->tie_break;
    if (tb == "random") {
      o.collect.tie_break = colnum::TieBreak::kSeededRandom;
    } else if (tb != "deterministic") {
      colnum::throw_invalid("unknown tie-break \"" + tb + "\"");
    }
  }
  o.collect.seed = opts->seed;
  o.audit = opts->audit != 0;
  return o;
}

std::size_t exact_cap_of(const colnum_uniform_options* opts) {
  return opts && opts->exact_cap ? opts->exact_cap : colnum::kDefaultExactCap;
}

colnum_status finish_run(const colnum::UniformRun& run, colnum_ordering** sigma_star, char** json) {
  put_json(json, colnum::to_json(run));
  if (sigma_star) *sigma_star = new colnum_ordering{run.sigma_star};
  if (!run.ok) return set_error(COLNUM_CHECK_FAILED, "a bound check failed");
  return COLNUM_OK;
}

}  // namespace

extern "C" {

const char* colnum_version(void) { return "0.1.0"; }

const char* colnum_last_error(void) { return last_error.c_str(); }

void colnum_string_free(char* s) { std::free(s); }

colnum_status colnum_graph_parse(const char* text, colnum_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new colnum_graph{colnum::parse_graph(text)};
    return COLNUM_OK;
  });
}

colnum_status colnum_graph_read(const char* path, colnum_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new colnum_graph{colnum::read_graph_file(path)};
    return COLNUM_OK;
  });
}

colnum_status colnum_graph_from_edges(size_t n, const uint32_t* endpoints, size_t edge_count, colnum_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (edge_count) require(endpoints, "endpoints");
    std::vector<colnum::Edge> edges;
    for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    *out = new colnum_graph{colnum::Graph(n, edges)};
    return COLNUM_OK;
  });
}

void colnum_graph_free(colnum_graph* g) { delete g; }

size_t colnum_graph_vertex_count(const colnum_graph* g) { return g ? g->g.vertex_count() : 0; }

size_t colnum_graph_edge_count(const colnum_graph* g) { return g ? g->g.edge_count() : 0; }

colnum_status colnum_graph_serialize(const colnum_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(colnum::serialize_graph(g->g));
    return COLNUM_OK;
  });
}

colnum_status colnum_graph_distance(const colnum_graph* g, uint32_t x, uint32_t y, size_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    auto d = colnum::distance(g->g, x, y);
    *out = d ? *d : SIZE_MAX;
    return COLNUM_OK;
  });
}

colnum_status colnum_ordering_parse(const char* text, size_t n, colnum_ordering** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new colnum_ordering{colnum::parse_ordering(text, n)};
    return COLNUM_OK;
  });
}

colnum_status colnum_ordering_read(const char* path, size_t n, colnum_ordering** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new colnum_ordering{colnum::read_ordering_file(path, n)};
    return COLNUM_OK;
  });
}

colnum_status colnum_ordering_from_sequence(const uint32_t* seq, size_t n, colnum_ordering** out) {
  return guarded([&] {
    require(out, "out");
    if (n) require(seq, "seq");
    *out = new colnum_ordering{colnum::Ordering(std::vector<colnum::Vertex>(seq, seq + n))};
    return COLNUM_OK;
  });
}

colnum_status colnum_ordering_degeneracy(const colnum_graph* g, colnum_ordering** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new colnum_ordering{colnum::degeneracy_ordering(g->g)};
    return COLNUM_OK;
  });
}

void colnum_ordering_free(colnum_ordering* o) { delete o; }

size_t colnum_ordering_size(const colnum_ordering* o) { return o ? o->o.size() : 0; }

void colnum_ordering_sequence(const colnum_ordering* o, uint32_t* buf) {
  if (!o || !buf) return;
  for (size_t i = 0; i < o->o.size(); ++i) buf[i] = o->o.at(i);
}

colnum_status colnum_eval(const colnum_graph* g, const colnum_ordering* o, unsigned radius, const char* kind,
                          size_t path_budget, size_t* value, char** json) {
  return guarded([&] {
    require(g, "graph");
    require(o, "ordering");
    if (o->o.size() != g->g.vertex_count()) colnum::throw_invalid("ordering does not match the graph");
    auto report = colnum::evaluate_ordering(g->g, o->o, to_radius(radius), to_kind(kind),
                                            path_budget ? path_budget : colnum::kDefaultPathBudget);
    if (value) *value = report.value;
    put_json(json, colnum::to_json(report));
    return COLNUM_OK;
  });
}

colnum_status colnum_exact(const colnum_graph* g, unsigned radius, const char* kind, size_t cap, size_t* value,
                           colnum_ordering** witness, char** json) {
  return guarded([&] {
    require(g, "graph");
    colnum::ExactOptions opt;
    if (cap) opt.cap = cap;
    auto res = colnum::exact_min(g->g, to_radius(radius), to_kind(kind), opt);
    if (value) *value = res.value;
    put_json(json, colnum::to_json(res));
    if (witness) *witness = new colnum_ordering{res.witness};
    return COLNUM_OK;
  });
}

colnum_status colnum_treewidth(const colnum_graph* g, size_t cap, size_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = colnum::treewidth_oracle(g->g, cap ? cap : colnum::kDefaultExactCap);
    return COLNUM_OK;
  });
}

colnum_status colnum_treedepth(const colnum_graph* g, size_t cap, size_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = colnum::treedepth_oracle(g->g, cap ? cap : colnum::kDefaultExactCap);
    return COLNUM_OK;
  });
}

colnum_status colnum_uniform_instance(const char* instance_json, const colnum_uniform_options* opts,
                                      colnum_ordering** sigma_star, char** json) {
  return guarded([&] {
    require(instance_json, "instance_json");
    auto inst = colnum::parse_instance_json(instance_json, exact_cap_of(opts));
    auto run = colnum::run_instance(std::move(inst), to_options(opts));
    return finish_run(run, sigma_star, json);
  });
}

colnum_status colnum_uniform_graphs(const char* mode, const colnum_graph* const* graphs, const unsigned* radii,
                                    size_t count, const char* eps, const char* sigma,
                                    const colnum_uniform_options* opts, colnum_ordering** sigma_star, char** json) {
  return guarded([&] {
    require(mode, "mode");
    require(graphs, "graphs");
    if (count == 0) colnum::throw_invalid("no graphs given");
    for (size_t i = 0; i < count; ++i) require(graphs[i], "graph");
    std::string s = sigma ? sigma : "degeneracy";
    colnum::SigmaProvider provider;
    if (s == "exact") {
      provider = colnum::exact_sigma_provider(exact_cap_of(opts));
    } else if (s == "degeneracy") {
      provider = colnum::degeneracy_sigma_provider();
    } else {
      colnum::throw_invalid("unknown sigma source \"" + s + "\"");
    }
    auto options = to_options(opts);
    std::string m = mode;
    colnum::UniformRun run;
    if (m == "dyadic") {
      if (count != 1) colnum::throw_invalid("dyadic mode takes one graph");
      run = colnum::uniform_single(graphs[0]->g, provider, options);
    } else if (m == "eps") {
      if (count != 1) colnum::throw_invalid("eps mode takes one graph");
      if (!eps) colnum::throw_invalid("eps mode needs eps");
      run = colnum::uniform_single_eps(graphs[0]->g, colnum::parse_rational(eps), provider, options);
    } else if (m == "multi") {
      require(radii, "radii");
      std::vector<std::pair<colnum::Graph, unsigned>> pairs;
      for (size_t i = 0; i < count; ++i) {
        if (radii[i] == 0) colnum::throw_invalid("multi mode needs finite positive radii");
        pairs.emplace_back(graphs[i]->g, radii[i]);
      }
      run = colnum::uniform_multi(pairs, provider, options);
    } else {
      colnum::throw_invalid("unknown mode \"" + m + "\"");
    }
    return finish_run(run, sigma_star, json);
  });
}

colnum_status colnum_example21(unsigned t, unsigned n, unsigned r, unsigned r_prime, colnum_graph** graph,
                               char** labels_json) {
  return guarded([&] {
    auto g = colnum::build_example21({t, n, r, r_prime});
    put_json(labels_json, colnum::labels_json(g));
    if (graph) *graph = new colnum_graph{std::move(g.graph)};
    return COLNUM_OK;
  });
}

colnum_status colnum_example21_verify(unsigned t, unsigned n, unsigned r, unsigned r_prime, size_t samples,
                                      uint64_t seed, char** json) {
  return guarded([&] {
    colnum::Example21Params p{t, n, r, r_prime};
    auto g = colnum::build_example21(p);
    auto facts = colnum::verify_facts(g);
    auto claims = colnum::verify_claims(g, samples, seed);
    colnum::Json j;
    j["vertices"] = g.graph.vertex_count();
    j["edges"] = g.graph.edge_count();
    j["facts"] = colnum::to_json(facts);
    j["claims"] = colnum::to_json(claims, p);
    const bool ok = facts.ok() && claims.ok();
    j["ok"] = ok;
    put_json(json, j);
    if (!ok) return set_error(COLNUM_CHECK_FAILED, "a fact or claim failed");
    return COLNUM_OK;
  });
}

colnum_status colnum_verify_suite(const char* suite, uint64_t seed, char** json) {
  return guarded([&] {
    require(suite, "suite");
    auto results = colnum::run_suite(suite, seed);
    auto report = colnum::suite_report(suite, seed, results);
    put_json(json, report);
    if (!report["pass"].get<bool>()) return set_error(COLNUM_CHECK_FAILED, "a criterion failed");
    return COLNUM_OK;
  });
}

}  // extern "C"
