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

#include "colnum/uniform.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>

#include "colnum/error.hpp"
#include "colnum/rng.hpp"

namespace colnum {

std::uint64_t UniformInstance::total_weight() const {
  std::uint64_t total = 0;
  for (const auto& layer : layers) total += layer.a;
  return total;
}

void UniformInstance::validate() const {
  if (layers.empty()) throw_invalid("instance has no layers");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto& layer = layers[i];
    auto where = "layer " + std::to_string(i) + ": ";
    if (layer.graph.vertex_count() != n)
      throw_invalid(where + "graph has " + std::to_string(layer.graph.vertex_count()) + " vertices, expected " +
                    std::to_string(n));
    if (layer.sigma.size() != n) throw_invalid(where + "ordering does not cover the shared vertex set");
    if (layer.r == 0) throw_invalid(where + "radius must be positive");
    if (layer.a == 0) throw_invalid(where + "weight must be positive");
  }
}

Graph build_reachability_graph(const Graph& g, const Ordering& sigma, Radius r) {
  auto sets = weakly_reachable_sets(g, sigma, r);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex u : sets[v])
      if (u != v) edges.emplace_back(u, v);  // u is strictly earlier, so each pair appears once
  return Graph(g.vertex_count(), edges);
}

Claim4Result claim4_check(const Graph& h, const Ordering& sigma, const Graph& g, Radius r) {
  Claim4Result res;
  res.scol2_h = scol_of_ordering(h, sigma, Radius(2)).value;
  Radius doubled = r.is_infinite() ? r : Radius(2 * r.value());
  res.wcol2r_g = wcol_of_ordering(g, sigma, doubled).value;
  res.holds = res.scol2_h <= res.wcol2r_g;
  return res;
}

PreparedInstance prepare_instance(UniformInstance instance) {
  instance.validate();
  PreparedInstance p;
  for (const auto& layer : instance.layers) {
    Graph h = build_reachability_graph(layer.graph, layer.sigma, Radius(layer.r));
    auto c4 = claim4_check(h, layer.sigma, layer.graph, Radius(layer.r));
    p.w.push_back(c4.wcol2r_g);
    p.claim4.push_back(c4);
    p.reach_graphs.push_back(std::move(h));
  }
  p.instance = std::move(instance);
  return p;
}

CollectTrace collect_ordering(const PreparedInstance& prepared, const CollectOptions& options) {
  const auto& inst = prepared.instance;
  const std::size_t n = inst.n;
  const std::size_t k = inst.layers.size();
  const std::uint64_t total = inst.total_weight();
  if (prepared.reach_graphs.size() != k || prepared.w.size() != k)
    throw_invalid("prepared instance is inconsistent");

  CollectTrace trace;
  trace.processed_counts.assign(n, 0);
  trace.claim5_max.assign(k, 0);
  if (n == 0) {
    trace.sigma_star = Ordering(std::vector<Vertex>{});
    return trace;
  }

  CounterRng rng(options.seed);
  const bool random = options.tie_break == TieBreak::kSeededRandom;

  // budget[v * k + i] = m_v(i); remaining[v] = sum over i
  std::vector<std::uint64_t> budget(n * k);
  std::vector<std::uint64_t> remaining(n, total);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < k; ++i) budget[v * k + i] = inst.layers[i].a;

  std::vector<bool> collected(n, false);
  std::vector<Vertex> sequence;
  sequence.reserve(n);

  // Uncollected set for random fresh picks (swap-remove), and a cursor into
  // sigma_1 for deterministic ones.
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  std::vector<std::size_t> pool_pos(n);
  std::iota(pool_pos.begin(), pool_pos.end(), std::size_t{0});
  std::size_t cursor = 0;
  const Ordering& sigma1 = inst.layers[0].sigma;

  auto fresh_pick = [&]() -> Vertex {
    if (random) return pool[rng.below(pool.size())];
    while (collected[sigma1.at(cursor)]) ++cursor;
    return sigma1.at(cursor);
  };

  // claim5[i * n + w]: collected vertices in N_{H_i}(w) that sigma_i places after w
  std::vector<std::size_t> claim5(options.check_claim5 ? n * k : 0, 0);

  auto collect = [&](Vertex v) {
    collected[v] = true;
    sequence.push_back(v);
    std::size_t pos = pool_pos[v];
    pool[pos] = pool.back();
    pool_pos[pool[pos]] = pos;
    pool.pop_back();
    if (!options.check_claim5) return;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& sigma = inst.layers[i].sigma;
      const std::uint64_t a = inst.layers[i].a;
      for (Vertex w : prepared.reach_graphs[i].neighbors(v)) {
        if (collected[w] || !sigma.before(w, v)) continue;
        std::size_t c = ++claim5[i * n + w];
        trace.claim5_max[i] = std::max(trace.claim5_max[i], c);
        // c <= (A / a_i) * w_i, compared without division
        if (c * a > total * prepared.w[i]) ++trace.claim5_violations;
      }
    }
  };

  Vertex v = fresh_pick();
  std::vector<std::size_t> open_layers;
  while (sequence.size() < n) {
    if (collected[v]) throw Error(ErrorCode::kCheckFailed, "collecting walk visited a collected vertex");

    std::size_t i = 0;
    if (random) {
      open_layers.clear();
      for (std::size_t j = 0; j < k; ++j)
        if (budget[v * k + j] != 0) open_layers.push_back(j);
      i = open_layers[rng.below(open_layers.size())];
    } else {
      while (budget[v * k + i] == 0) ++i;
    }
    --budget[v * k + i];
    --remaining[v];
    ++trace.processed_counts[v];
    ++trace.rounds;
    if (remaining[v] == 0) collect(v);

    // sigma_i-earliest uncollected vertex of N_{H_i}[v]
    const auto& sigma = inst.layers[i].sigma;
    std::optional<Vertex> next;
    if (!collected[v]) next = v;
    for (Vertex u : prepared.reach_graphs[i].neighbors(v)) {
      if (collected[u]) continue;
      if (!next || sigma.before(u, *next)) next = u;
    }
    if (next) {
      v = *next;
    } else if (sequence.size() < n) {
      v = fresh_pick();
    }
  }

  trace.sigma_star = Ordering(std::move(sequence));
  return trace;
}

std::vector<LayerBound> verify_thm41_bound(const PreparedInstance& prepared, const Ordering& sigma_star) {
  const auto& inst = prepared.instance;
  const std::uint64_t total = inst.total_weight();
  std::vector<LayerBound> out;
  for (std::size_t i = 0; i < inst.layers.size(); ++i) {
    const auto& layer = inst.layers[i];
    LayerBound b;
    b.r = layer.r;
    b.a = layer.a;
    b.w = prepared.w[i];
    b.lhs = scol_of_ordering(layer.graph, sigma_star, Radius(layer.r)).value;
    std::uint64_t w = b.w;
    std::uint64_t num = total * w * w + layer.a * w;
    std::uint64_t den = layer.a;
    b.ok = b.lhs * den <= num;
    std::uint64_t g = std::gcd(num, den);
    b.rhs_num = num / g;
    b.rhs_den = den / g;
    out.push_back(b);
  }
  return out;
}

namespace {

// Shortest u..w path whose internal vertices all come after w in sigma*,
// lexicographically smallest when read from w. Returned w first.
std::vector<Vertex> witness_path(const Graph& g, const Ordering& star, Vertex w, Vertex u) {
  const std::size_t n = g.vertex_count();
  const std::size_t rw = star.rank(w);
  std::vector<std::size_t> dist(n, kUnreachable);
  std::deque<Vertex> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    Vertex c = queue.front();
    queue.pop_front();
    if (c == w) continue;
    for (Vertex nb : g.neighbors(c)) {
      if (dist[nb] != kUnreachable) continue;
      if (nb != w && star.rank(nb) <= rw) continue;
      dist[nb] = dist[c] + 1;
      queue.push_back(nb);
    }
  }
  if (dist[w] == kUnreachable) throw Error(ErrorCode::kCheckFailed, "no witnessing path for a strongly reachable vertex");
  std::vector<Vertex> path{w};
  Vertex cur = w;
  while (cur != u) {
    Vertex step = cur;
    for (Vertex nb : g.neighbors(cur)) {  // sorted, so the first hit is the smallest id
      if (dist[nb] != kUnreachable && dist[nb] + 1 == dist[cur] && (nb == u || star.rank(nb) > rw)) {
        step = nb;
        break;
      }
    }
    cur = step;
    path.push_back(cur);
  }
  return path;
}

}  // namespace

std::vector<PartitionAudit> audit_partition(const PreparedInstance& prepared, const Ordering& sigma_star) {
  const auto& inst = prepared.instance;
  const std::uint64_t total = inst.total_weight();
  std::vector<PartitionAudit> out;
  for (std::size_t i = 0; i < inst.layers.size(); ++i) {
    const auto& layer = inst.layers[i];
    const std::size_t wi = prepared.w[i];
    PartitionAudit audit;
    audit.bound_x1 = wi - 1;
    audit.bound_x2 = Rational(total, layer.a) * wi;
    audit.bound_x3 = audit.bound_x2 * (wi - 1);
    auto sets = strongly_reachable_sets(layer.graph, sigma_star, Radius(layer.r));
    for (Vertex w = 0; w < inst.n; ++w) {
      std::size_t x1 = 0, x2 = 0, x3 = 0;
      for (Vertex u : sets[w]) {
        if (u == w) continue;
        auto path = witness_path(layer.graph, sigma_star, w, u);
        Vertex p = layer.sigma.min_of(path);
        if (p == u) {
          ++x1;
        } else if (p == w) {
          ++x2;
        } else {
          ++x3;
        }
      }
      audit.max_x1 = std::max(audit.max_x1, x1);
      audit.max_x2 = std::max(audit.max_x2, x2);
      audit.max_x3 = std::max(audit.max_x3, x3);
    }
    audit.ok = audit.max_x1 <= audit.bound_x1 && Rational(audit.max_x2) <= audit.bound_x2 &&
               Rational(audit.max_x3) <= audit.bound_x3;
    out.push_back(std::move(audit));
  }
  return out;
}

SigmaProvider exact_sigma_provider(std::size_t cap) {
  return [cap](const Graph& g, Radius r) {
    ExactOptions opt;
    opt.cap = cap;
    return exact_min(g, r, ReachKind::kWeak, opt).witness;
  };
}

SigmaProvider degeneracy_sigma_provider() {
  return [](const Graph& g, Radius) { return degeneracy_ordering(g); };
}

SigmaProvider fixed_sigma_provider(Ordering sigma) {
  return [sigma = std::move(sigma)](const Graph& g, Radius) {
    if (sigma.size() != g.vertex_count()) throw_invalid("fixed ordering does not match the graph");
    return sigma;
  };
}

UniformRun run_instance(UniformInstance instance, const UniformOptions& options) {
  UniformRun run;
  run.mode = "instance";
  run.k = instance.layers.size();
  for (const auto& layer : instance.layers) run.weights.push_back(layer.a);
  run.total_weight = instance.total_weight();

  PreparedInstance prepared = prepare_instance(std::move(instance));
  CollectTrace trace = collect_ordering(prepared, options.collect);
  run.sigma_star = trace.sigma_star;
  run.layers = verify_thm41_bound(prepared, run.sigma_star);
  if (options.audit) run.audit = audit_partition(prepared, run.sigma_star);

  bool ok = trace.claim5_violations == 0 && trace.rounds == run.total_weight * prepared.instance.n;
  for (auto c : trace.processed_counts) ok = ok && c == run.total_weight;
  for (const auto& b : run.layers) ok = ok && b.ok;
  for (const auto& c : prepared.claim4) ok = ok && c.holds;
  for (const auto& a : run.audit) ok = ok && a.ok;
  run.ok = ok;
  run.trace = std::move(trace);
  run.prepared = std::move(prepared);
  return run;
}

std::pair<std::size_t, std::vector<std::uint64_t>> dyadic_weights(std::size_t n) {
  if (n <= 3) return {0, {}};
  std::size_t k = static_cast<std::size_t>(std::bit_width(n - 2)) - 1;  // floor(log2(n - 2))
  std::vector<std::uint64_t> a;
  for (std::size_t i = 1; i <= k; ++i) a.push_back(std::uint64_t{1} << (k - i));
  return {k, a};
}

std::pair<std::size_t, std::vector<std::uint64_t>> eps_weights(std::size_t n, const Rational& eps) {
  if (eps <= 0) throw_invalid("eps must be positive");
  const Rational base = 1 + eps;
  const Rational eps2 = eps * eps;
  std::size_t k = 1;
  while (pow(base, static_cast<unsigned>(k + 2)) / eps2 + 1 < Rational(n)) ++k;

  std::vector<std::uint64_t> a;
  BigInt total = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    BigInt ai = ceil(pow(base, static_cast<unsigned>(k + 1 - i)) - 1);
    if (ai < 1 || ai > BigInt(std::numeric_limits<std::uint32_t>::max()))
      throw_invalid("eps weights out of range");
    a.push_back(ai.convert_to<std::uint64_t>());
    total += ai;
  }
  if (!(Rational(total) < pow(base, static_cast<unsigned>(k + 1)) / eps))
    throw Error(ErrorCode::kCheckFailed, "eps weights violate A < (1+eps)^(k+1)/eps");
  return {k, a};
}

namespace {

UniformRun run_layers(const std::vector<std::pair<Graph, unsigned>>& pairs, const std::vector<std::uint64_t>& a,
                      const SigmaProvider& provider, const UniformOptions& options) {
  UniformInstance inst;
  inst.n = pairs.front().first.vertex_count();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [g, r] = pairs[i];
    if (g.vertex_count() != inst.n) throw_invalid("graphs do not share a vertex set");
    inst.layers.push_back(Layer{g, r, a[i], provider(g, Radius(2 * r))});
  }
  return run_instance(std::move(inst), options);
}

void add_checks(UniformRun& run, const std::function<Rational(std::size_t layer)>& factor) {
  for (std::size_t i = 0; i < run.layers.size(); ++i) {
    const auto& b = run.layers[i];
    RadiusCheck c;
    c.r = b.r;
    c.lhs = b.lhs;
    c.w = b.w;
    c.bound = factor(i) * Rational(b.w * b.w);
    c.ok = Rational(c.lhs) <= c.bound;
    run.ok = run.ok && c.ok;
    run.checks.push_back(std::move(c));
  }
}

UniformRun vacuous_run(const std::string& mode, std::size_t n) {
  UniformRun run;
  run.mode = mode;
  run.sigma_star = Ordering::identity(n);
  return run;
}

}  // namespace

UniformRun uniform_single(const Graph& g, const SigmaProvider& provider, const UniformOptions& options) {
  auto [k, a] = dyadic_weights(g.vertex_count());
  if (k == 0) return vacuous_run("dyadic", g.vertex_count());
  std::vector<std::pair<Graph, unsigned>> pairs;
  for (std::size_t i = 1; i <= k; ++i) pairs.emplace_back(g, static_cast<unsigned>(i));
  UniformRun run = run_layers(pairs, a, provider, options);
  run.mode = "dyadic";
  add_checks(run, [&](std::size_t layer) { return Rational((std::uint64_t{1} << (layer + 1)) + 1); });
  return run;
}

UniformRun uniform_single_eps(const Graph& g, const Rational& eps, const SigmaProvider& provider,
                              const UniformOptions& options) {
  auto [k, a] = eps_weights(g.vertex_count(), eps);
  if (g.vertex_count() == 0) return vacuous_run("eps", 0);
  std::vector<std::pair<Graph, unsigned>> pairs;
  for (std::size_t i = 1; i <= k; ++i) pairs.emplace_back(g, static_cast<unsigned>(i));
  UniformRun run = run_layers(pairs, a, provider, options);
  run.mode = "eps";
  run.eps = eps;
  const Rational base = 1 + eps;
  add_checks(run, [&](std::size_t layer) {
    return pow(base, static_cast<unsigned>(layer + 2)) / (eps * eps) + 1;
  });
  return run;
}

UniformRun uniform_multi(const std::vector<std::pair<Graph, unsigned>>& pairs, const SigmaProvider& provider,
                         const UniformOptions& options) {
  if (pairs.empty()) throw_invalid("multi mode needs at least one graph");
  std::vector<std::uint64_t> a(pairs.size(), 1);
  UniformRun run = run_layers(pairs, a, provider, options);
  run.mode = "multi";
  const Rational factor(static_cast<std::uint64_t>(pairs.size() + 1));
  add_checks(run, [&](std::size_t) { return factor; });
  return run;
}

}  // namespace colnum
