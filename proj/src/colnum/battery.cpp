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

#include "colnum/battery.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "colnum/corpus.hpp"
#include "colnum/error.hpp"
#include "colnum/exact.hpp"
#include "colnum/example21.hpp"
#include "colnum/naive_oracle.hpp"
#include "colnum/reach.hpp"
#include "colnum/rng.hpp"
#include "colnum/uniform.hpp"

namespace colnum {

namespace {

constexpr std::size_t kOrderingsPerGraph = 5;
constexpr std::size_t kExactCap = 12;

class Tally {
 public:
  explicit Tally(CriterionResult& out) : out_(out) {}

  bool check(bool ok, const std::function<std::string()>& what) {
    ++out_.checked;
    if (!ok) {
      if (out_.failed++ == 0) out_.first_failure = what();
    }
    return ok;
  }

  void fail(const std::string& what) {
    check(false, [&] { return what; });
  }

 private:
  CriterionResult& out_;
};

CriterionResult begin(int id, std::string name) {
  CriterionResult c;
  c.id = id;
  c.name = std::move(name);
  return c;
}

void finish(CriterionResult& c) { c.pass = c.failed == 0 && c.checked > 0; }

std::string describe(const Graph& g) {
  std::string s = "n=" + std::to_string(g.vertex_count()) + " edges=[";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g.edges()[i].first) + "-" + std::to_string(g.edges()[i].second);
  }
  return s + "]";
}

std::string describe(const Ordering& sigma) {
  std::string s = "sigma=(";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sigma.at(i));
  }
  return s + ")";
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t out = 1;
  while (e--) out *= b;
  return out;
}

// Graphs with 1 <= n <= 6 vertices, one per isomorphism class.
std::vector<Graph> small_corpus() {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& g : nonisomorphic_graphs(n)) out.push_back(g);
  return out;
}

const std::vector<Radius>& corpus_radii() {
  static const std::vector<Radius> radii{Radius(1), Radius(2), Radius(3), Radius::infinity()};
  return radii;
}

// Sparse-ish random graph: expected average degree between 1 and 4.
Graph sparse_graph(CounterRng& rng, std::size_t n) {
  if (n < 2) return Graph(n, {});
  std::uint64_t c = rng.between(2, 8);
  return random_graph(rng, n, std::min<std::uint64_t>(c, 2 * (n - 1)), 2 * (n - 1));
}

CriterionResult oracle_suite(std::uint64_t seed) {
  CriterionResult c = begin(1, "reachability sets match the all-simple-paths oracle");
  Tally tally(c);
  CounterRng root = CounterRng(seed).fork(1);
  auto corpus = small_corpus();
  std::uint64_t back_checks = 0;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Graph& g = corpus[gi];
    CounterRng rng = root.fork(gi);
    for (std::size_t s = 0; s < kOrderingsPerGraph; ++s) {
      Ordering sigma = random_ordering(rng, g.vertex_count());
      for (Radius r : corpus_radii()) {
        const std::size_t len = r.bound(g.vertex_count());
        auto weak_all = weakly_reachable_sets(g, sigma, r);
        auto strong_all = strongly_reachable_sets(g, sigma, r);
        for (Vertex x = 0; x < g.vertex_count(); ++x) {
          auto where = [&] { return describe(g) + " " + describe(sigma) + " r=" + r.to_string() + " x=" + std::to_string(x); };
          auto weak = naive::weak_set(g, sigma, x, len);
          auto strong = naive::strong_set(g, sigma, x, len);
          tally.check(weakly_reachable_set(g, sigma, x, r) == weak, [&] { return "W_r per target: " + where(); });
          tally.check(weak_all[x] == weak, [&] { return "W_r sweep: " + where(); });
          tally.check(strongly_reachable_set(g, sigma, x, r) == strong, [&] { return "S_r: " + where(); });
          tally.check(strong_all[x] == strong, [&] { return "S_r sweep: " + where(); });
          tally.check(back_connectivity(g, sigma, x, r) == naive::back_connectivity(g, sigma, x, len),
                      [&] { return "b_r: " + where(); });
          ++back_checks;
        }
      }
    }
  }
  c.stats["graphs"] = corpus.size();
  c.stats["orderings_per_graph"] = kOrderingsPerGraph;
  c.stats["radii"] = {1, 2, 3, "inf"};
  c.stats["back_connectivity_checks"] = back_checks;
  finish(c);
  return c;
}

CriterionResult sandwich_suite(std::uint64_t seed) {
  CriterionResult c = begin(2, "adm_r <= scol_r <= wcol_r <= scol_r^r per ordering and at graph level");
  Tally tally(c);
  CounterRng root = CounterRng(seed).fork(2);
  auto corpus = small_corpus();

  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Graph& g = corpus[gi];
    const std::size_t n = g.vertex_count();
    CounterRng rng = root.fork(gi);
    for (std::size_t s = 0; s < kOrderingsPerGraph; ++s) {
      Ordering sigma = random_ordering(rng, n);
      std::vector<std::size_t> prev_w(n, 0), prev_s(n, 0);
      for (unsigned r = 1; r <= 3; ++r) {
        auto where = [&] { return describe(g) + " " + describe(sigma) + " r=" + std::to_string(r); };
        auto w = wcol_of_ordering(g, sigma, Radius(r));
        auto st = scol_of_ordering(g, sigma, Radius(r));
        auto a = adm_of_ordering(g, sigma, Radius(r));
        tally.check(a.value <= st.value, [&] { return "adm > scol: " + where(); });
        tally.check(st.value <= w.value, [&] { return "scol > wcol: " + where(); });
        tally.check(w.value <= ipow(st.value, r), [&] { return "wcol > scol^r: " + where(); });
        if (r == 1)
          tally.check(a.value == st.value && st.value == w.value, [&] { return "r=1 collapse: " + where(); });
        for (Vertex x = 0; x < n; ++x) {
          tally.check(w.per_vertex[x] >= prev_w[x] && st.per_vertex[x] >= prev_s[x],
                      [&] { return "monotone in r: " + where(); });
        }
        prev_w = w.per_vertex;
        prev_s = st.per_vertex;
      }
      if (n >= 2) {
        Radius stable(static_cast<unsigned>(n - 1));
        tally.check(wcol_of_ordering(g, sigma, stable).per_vertex ==
                            wcol_of_ordering(g, sigma, Radius::infinity()).per_vertex &&
                        scol_of_ordering(g, sigma, stable).per_vertex ==
                            scol_of_ordering(g, sigma, Radius::infinity()).per_vertex,
                    [&] { return "r=n-1 differs from r=inf: " + describe(g) + " " + describe(sigma); });
      }
    }

    std::size_t prev[3] = {0, 0, 0};
    for (unsigned r = 1; r <= 3; ++r) {
      auto where = [&] { return describe(g) + " exact r=" + std::to_string(r); };
      std::size_t val[3];
      for (int kind = 0; kind < 3; ++kind) {
        auto rk = static_cast<ReachKind>(kind);
        auto res = exact_min(g, Radius(r), rk);
        val[kind] = res.value;
        tally.check(evaluate_ordering(g, res.witness, Radius(r), rk).value == res.value,
                    [&] { return "witness does not reproduce value: " + where(); });
        tally.check(res.value >= prev[kind], [&] { return "exact value decreased with r: " + where(); });
        prev[kind] = res.value;
        ExactOptions plain;
        plain.prune = false;
        tally.check(exact_min(g, Radius(r), rk, plain).value == res.value,
                    [&] { return "pruned and unpruned search disagree: " + where(); });
        if (n <= 5) {
          tally.check(naive::min_over_all_orderings(g, r, kind) == res.value,
                      [&] { return "exact search disagrees with the naive minimum: " + where(); });
        }
      }
      const std::size_t w = val[0], s = val[1], a = val[2];
      tally.check(a <= s && s <= w && w <= ipow(s, r), [&] { return "graph-level sandwich: " + where(); });
      if (r == 1) tally.check(a == s && s == w, [&] { return "graph-level r=1 collapse: " + where(); });
    }
  }
  c.stats["graphs"] = corpus.size();
  c.stats["orderings_per_graph"] = kOrderingsPerGraph;
  finish(c);
  return c;
}

CriterionResult prop11_suite(std::uint64_t) {
  CriterionResult c = begin(3, "scol_inf = tw + 1 and wcol_inf = td on connected graphs");
  Tally tally(c);
  std::uint64_t graphs = 0;
  std::map<std::string, std::uint64_t> by_n;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& g : nonisomorphic_graphs(n)) {
      if (!is_connected(g)) continue;
      ++graphs;
      ++by_n[std::to_string(n)];
      const std::size_t tw = treewidth_oracle(g);
      const std::size_t td = treedepth_oracle(g);
      const std::size_t s = exact_min(g, Radius::infinity(), ReachKind::kStrong).value;
      const std::size_t w = exact_min(g, Radius::infinity(), ReachKind::kWeak).value;
      tally.check(s == tw + 1, [&] {
        return describe(g) + ": scol_inf=" + std::to_string(s) + " tw=" + std::to_string(tw);
      });
      tally.check(w == td, [&] {
        return describe(g) + ": wcol_inf=" + std::to_string(w) + " td=" + std::to_string(td);
      });
    }
  }
  c.stats["connected_graphs"] = graphs;
  c.stats["by_n"] = by_n;
  finish(c);
  return c;
}

// Shared by the collecting-walk criteria: both tie-break policies, audit on.
struct RunCheck {
  bool bound = true;
  bool claim4 = true;
  bool claim5 = true;
  bool rounds = true;
  bool processed = true;
  bool audit = true;
};

RunCheck inspect(const UniformRun& run) {
  RunCheck rc;
  if (!run.prepared || !run.trace) return rc;
  const auto& trace = *run.trace;
  for (const auto& b : run.layers) rc.bound = rc.bound && b.ok;
  for (const auto& c4 : run.prepared->claim4) rc.claim4 = rc.claim4 && c4.holds;
  rc.claim5 = trace.claim5_violations == 0;
  rc.rounds = trace.rounds == run.total_weight * run.prepared->instance.n;
  for (auto p : trace.processed_counts) rc.processed = rc.processed && p == run.total_weight;
  for (const auto& a : run.audit) rc.audit = rc.audit && a.ok;
  return rc;
}

std::vector<UniformOptions> both_policies(std::uint64_t seed) {
  UniformOptions det;
  det.audit = true;
  UniformOptions rnd = det;
  rnd.collect.tie_break = TieBreak::kSeededRandom;
  rnd.collect.seed = seed;
  return {det, rnd};
}

std::vector<CriterionResult> thm41_suite(std::uint64_t seed) {
  CriterionResult c4 = begin(4, "collected ordering meets (A/a_i) w_i^2 + w_i on every layer");
  CriterionResult c10 = begin(10, "collecting walk runs A*n rounds and processes each vertex A times");
  Tally t4(c4), t10(c10);
  CounterRng root = CounterRng(seed).fork(4);
  constexpr std::size_t kInstances = 500;
  std::uint64_t runs = 0, exact_runs = 0, max_n = 0, max_a = 0;
  std::vector<std::size_t> claim5_peak;

  for (std::size_t idx = 0; idx < kInstances; ++idx) {
    CounterRng rng = root.fork(idx);
    const std::size_t n = rng.between(2, 30);
    const std::size_t k = rng.between(1, 3);
    max_n = std::max<std::uint64_t>(max_n, n);
    UniformInstance base;
    base.n = n;
    for (std::size_t i = 0; i < k; ++i) {
      Layer layer;
      // Now and then reuse the previous graph, as the single-graph wrappers do.
      layer.graph = (i > 0 && rng.chance(1, 3)) ? base.layers.back().graph : sparse_graph(rng, n);
      layer.r = static_cast<unsigned>(rng.between(1, 3));
      layer.a = rng.between(1, 4);
      max_a = std::max<std::uint64_t>(max_a, layer.a);
      base.layers.push_back(std::move(layer));
    }
    std::vector<std::pair<std::string, SigmaProvider>> providers{{"degeneracy", degeneracy_sigma_provider()}};
    if (n <= 9) providers.emplace_back("exact", exact_sigma_provider(9));

    for (const auto& [pname, provider] : providers) {
      UniformInstance inst = base;
      for (auto& layer : inst.layers) layer.sigma = provider(layer.graph, Radius(2 * layer.r));
      for (const auto& opts : both_policies(rng.fork(7).next())) {
        auto where = [&, &pname = pname, &opts = opts] {
          return "instance " + std::to_string(idx) + " (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                 ", sigma=" + pname +
                 (opts.collect.tie_break == TieBreak::kDeterministic ? ", deterministic)" : ", seeded)");
        };
        UniformRun run;
        try {
          run = run_instance(inst, opts);
        } catch (const Error& e) {
          t4.fail(where() + ": " + e.what());
          t10.fail(where() + ": " + e.what());
          continue;
        }
        ++runs;
        if (pname == "exact") ++exact_runs;
        RunCheck rc = inspect(run);
        t4.check(rc.bound, [&] { return where() + ": layer bound violated"; });
        t4.check(rc.claim4, [&] { return where() + ": scol_2(H_i) > wcol_2r(G_i)"; });
        t4.check(rc.claim5, [&] { return where() + ": collected-neighbour count exceeded (A/a_i) w_i"; });
        t4.check(rc.audit, [&] { return where() + ": X1/X2/X3 audit failed"; });
        t10.check(rc.rounds, [&] { return where() + ": rounds != A*n"; });
        t10.check(rc.processed, [&] { return where() + ": a vertex was not processed exactly A times"; });
        const auto& peak = run.trace->claim5_max;
        if (claim5_peak.size() < peak.size()) claim5_peak.resize(peak.size(), 0);
        for (std::size_t i = 0; i < peak.size(); ++i) claim5_peak[i] = std::max(claim5_peak[i], peak[i]);
      }
    }
  }
  c4.stats["instances"] = kInstances;
  c4.stats["runs"] = runs;
  c4.stats["runs_with_exact_sigma"] = exact_runs;
  c4.stats["max_n"] = max_n;
  c4.stats["max_a"] = max_a;
  c4.stats["claim5_max_by_layer_index"] = claim5_peak;
  c10.stats["runs"] = runs;
  finish(c4);
  finish(c10);
  return {c4, c10};
}

void record_wrapper_run(Tally& tally, const UniformRun& run, const std::string& where) {
  RunCheck rc = inspect(run);
  tally.check(rc.bound && rc.claim4 && rc.claim5 && rc.rounds && rc.processed && rc.audit,
              [&] { return where + ": collecting-walk invariant failed"; });
  for (const auto& chk : run.checks) {
    tally.check(chk.ok, [&] {
      return where + ": r=" + std::to_string(chk.r) + " scol=" + std::to_string(chk.lhs) + " > " + to_string(chk.bound);
    });
  }
}

CriterionResult thm13_suite(std::uint64_t seed) {
  CriterionResult c = begin(5, "single graph, all radii: scol_r(sigma*) <= (2^r + 1) wcol_2r^2");
  Tally tally(c);
  CounterRng root = CounterRng(seed).fork(5);
  constexpr std::size_t kGraphs = 100;
  std::map<std::string, std::uint64_t> by_k;
  for (std::size_t idx = 0; idx < kGraphs; ++idx) {
    CounterRng rng = root.fork(idx);
    const std::size_t n = rng.between(4, 12);
    Graph g = sparse_graph(rng, n);
    const std::string where = "graph " + std::to_string(idx) + " " + describe(g);
    try {
      for (const auto& opts : both_policies(rng.next())) {
        UniformRun run = uniform_single(g, exact_sigma_provider(kExactCap), opts);
        ++by_k[std::to_string(run.k)];
        record_wrapper_run(tally, run, where);
        tally.check(run.checks.size() == dyadic_weights(n).first, [&] { return where + ": wrong number of radii"; });
      }
    } catch (const Error& e) {
      tally.fail(where + ": " + e.what());
    }
  }
  c.stats["graphs"] = kGraphs;
  c.stats["runs_by_k"] = by_k;
  finish(c);
  return c;
}

CriterionResult thm15_suite(std::uint64_t seed) {
  CriterionResult c = begin(6, "several graphs, a_i = 1: scol_r_i(G_i, sigma*) <= (k + 1) wcol_2r_i^2");
  Tally tally(c);
  CounterRng root = CounterRng(seed).fork(6);
  constexpr std::size_t kInstances = 100;
  for (std::size_t idx = 0; idx < kInstances; ++idx) {
    CounterRng rng = root.fork(idx);
    const std::size_t n = rng.between(2, 12);
    const std::size_t k = rng.between(1, 3);
    std::vector<std::pair<Graph, unsigned>> pairs;
    for (std::size_t i = 0; i < k; ++i)
      pairs.emplace_back(sparse_graph(rng, n), static_cast<unsigned>(rng.between(1, 3)));
    const std::string where = "instance " + std::to_string(idx) + " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
    try {
      for (const auto& opts : both_policies(rng.next())) {
        UniformRun run = uniform_multi(pairs, exact_sigma_provider(kExactCap), opts);
        record_wrapper_run(tally, run, where);
      }
    } catch (const Error& e) {
      tally.fail(where + ": " + e.what());
    }
  }
  c.stats["instances"] = kInstances;
  finish(c);
  return c;
}

CriterionResult cor43_suite(std::uint64_t seed) {
  CriterionResult c = begin(7, "eps weights: scol_i(sigma*) <= ((1+eps)^(i+1)/eps^2 + 1) wcol_2i^2");
  Tally tally(c);
  CounterRng root = CounterRng(seed).fork(7);
  constexpr std::size_t kGraphs = 50;
  Json per_eps = Json::object();
  const char* eps_values[] = {"1/2", "1", "2"};
  for (std::size_t ei = 0; ei < std::size(eps_values); ++ei) {
    const char* eps_text = eps_values[ei];
    const Rational eps = parse_rational(eps_text);
    CounterRng stream = root.fork(ei);
    std::map<std::string, std::uint64_t> by_k;
    for (std::size_t idx = 0; idx < kGraphs; ++idx) {
      CounterRng rng = stream.fork(idx);
      const std::size_t n = rng.between(2, 12);
      Graph g = sparse_graph(rng, n);
      const std::string where = std::string("eps=") + eps_text + " graph " + std::to_string(idx) + " " + describe(g);
      try {
        // eps_weights asserts A < (1+eps)^(k+1)/eps itself; count it as a check.
        auto [k, a] = eps_weights(n, eps);
        std::uint64_t total = 0;
        for (auto x : a) total += x;
        tally.check(Rational(total) < pow(1 + eps, static_cast<unsigned>(k + 1)) / eps,
                    [&] { return where + ": A >= (1+eps)^(k+1)/eps"; });
        ++by_k[std::to_string(k)];
        for (const auto& opts : both_policies(rng.next())) {
          UniformRun run = uniform_single_eps(g, eps, exact_sigma_provider(kExactCap), opts);
          record_wrapper_run(tally, run, where);
        }
      } catch (const Error& e) {
        tally.fail(where + ": " + e.what());
      }
    }
    per_eps[eps_text] = by_k;
  }
  c.stats["graphs_per_eps"] = kGraphs;
  c.stats["k_by_eps"] = per_eps;
  finish(c);
  return c;
}

CriterionResult example21_suite(std::uint64_t seed) {
  CriterionResult c = begin(8, "counterexample family: facts E1-E3 and claims 1-3");
  Tally tally(c);
  constexpr std::size_t kSamples = 100;
  Json instances = Json::array();
  const Example21Params params[] = {{4, 4, 2, 4}, {4, 8, 2, 4}, {4, 6, 1, 3}};
  for (std::size_t pi = 0; pi < std::size(params); ++pi) {
    const auto& p = params[pi];
    const std::string where = "(t,n,r,r')=(" + std::to_string(p.t) + "," + std::to_string(p.n) + "," +
                              std::to_string(p.r) + "," + std::to_string(p.r_prime) + ")";
    auto g = build_example21(p);
    auto facts = verify_facts(g);
    tally.check(facts.e1, [&] { return where + ": E1 failed"; });
    tally.check(facts.e2, [&] { return where + ": E2 failed"; });
    tally.check(facts.e3, [&] { return where + ": E3 failed"; });
    auto claims = verify_claims(g, kSamples, CounterRng(seed).fork(8).fork(pi).next());
    tally.check(claims.claim1, [&] { return where + ": claim 1 failed"; });
    tally.check(claims.claim2, [&] { return where + ": claim 2 failed"; });
    tally.check(claims.claim3_failures == 0, [&] {
      return where + ": claim 3 failed on " + std::to_string(claims.claim3_failures) + " sampled orderings";
    });
    Json j = to_json(claims, p);
    j["vertices"] = g.graph.vertex_count();
    j["facts"] = to_json(facts);
    instances.push_back(std::move(j));
  }
  c.stats["instances"] = std::move(instances);
  finish(c);
  return c;
}

using SuiteFn = std::function<std::vector<CriterionResult>(std::uint64_t)>;

template <typename F>
SuiteFn single(F f) {
  return [f](std::uint64_t seed) { return std::vector<CriterionResult>{f(seed)}; };
}

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"oracle", single(oracle_suite)},   {"sandwich", single(sandwich_suite)}, {"prop11", single(prop11_suite)},
      {"thm41", thm41_suite},             {"thm13", single(thm13_suite)},       {"thm15", single(thm15_suite)},
      {"cor43", single(cor43_suite)},     {"example21", single(example21_suite)}};
  return table;
}

}  // namespace

Json to_json(const CriterionResult& c) {
  Json j;
  j["id"] = c.id;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["checked"] = c.checked;
  j["failed"] = c.failed;
  j["first_failure"] = c.first_failure.empty() ? Json(nullptr) : Json(c.first_failure);
  j["stats"] = c.stats;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

std::vector<CriterionResult> run_suite(std::string_view name, std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (const auto& [sname, fn] : suites()) {
    if (name != "all" && name != sname) continue;
    for (auto& c : fn(seed)) out.push_back(std::move(c));
  }
  if (out.empty()) throw_invalid("unknown suite \"" + std::string(name) + "\"");
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

Json suite_report(std::string_view name, std::uint64_t seed, const std::vector<CriterionResult>& results) {
  Json j;
  j["suite"] = name;
  j["seed"] = seed;
  Json criteria = Json::array();
  bool pass = true;
  for (const auto& c : results) {
    criteria.push_back(to_json(c));
    pass = pass && c.pass;
  }
  j["criteria"] = std::move(criteria);
  j["pass"] = pass;
  return j;
}

}  // namespace colnum
