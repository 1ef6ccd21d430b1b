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

#pragma once

// Uniform orderings: one ordering sigma* of a shared vertex set that keeps
// scol_{r_i}(G_i, sigma*) small for several (graph, radius) layers at once.
//
// Each layer brings a reference ordering sigma_i. Its reachability graph H_i
// joins u and v whenever one weakly r_i-reaches the other under sigma_i.
// The collecting walk gives every vertex a budget of a_i visits per layer and
// appends a vertex to sigma* once its whole budget is spent; after a visit on
// layer i it moves to the sigma_i-earliest uncollected vertex of N_{H_i}[v].
// With A = sum a_i and w_i = wcol_{2 r_i}(G_i, sigma_i), the result satisfies
//
//     scol_{r_i}(G_i, sigma*) <= (A / a_i) * w_i^2 + w_i    for every layer.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "colnum/exact.hpp"
#include "colnum/graph.hpp"
#include "colnum/ordering.hpp"
#include "colnum/rational.hpp"
#include "colnum/reach.hpp"

namespace colnum {

struct Layer {
  Graph graph;
  unsigned r = 1;
  std::uint64_t a = 1;
  Ordering sigma;
};

struct UniformInstance {
  std::size_t n = 0;
  std::vector<Layer> layers;

  std::uint64_t total_weight() const;  // A
  /// Throws Error(kInvalidInput) when a layer does not match n or has r or a zero.
  void validate() const;
};

/// Edge uv whenever u is weakly r-reachable from v under sigma (u != v).
Graph build_reachability_graph(const Graph& g, const Ordering& sigma, Radius r);

struct Claim4Result {
  std::size_t scol2_h = 0;   // scol_2(H, sigma)
  std::size_t wcol2r_g = 0;  // wcol_{2r}(G, sigma)
  bool holds = false;
};

Claim4Result claim4_check(const Graph& h, const Ordering& sigma, const Graph& g, Radius r);

/// Instance with its reachability graphs and w_i = wcol_{2 r_i}(G_i, sigma_i).
struct PreparedInstance {
  UniformInstance instance;
  std::vector<Graph> reach_graphs;
  std::vector<std::size_t> w;
  std::vector<Claim4Result> claim4;
};

PreparedInstance prepare_instance(UniformInstance instance);

enum class TieBreak { kDeterministic, kSeededRandom };

struct CollectOptions {
  /// kDeterministic: fresh picks take the sigma_1-earliest uncollected vertex
  /// and layer picks the smallest i with budget left. kSeededRandom draws
  /// both uniformly from a CounterRng keyed by `seed`.
  TieBreak tie_break = TieBreak::kDeterministic;
  std::uint64_t seed = 0;
  bool check_claim5 = true;
};

struct CollectTrace {
  Ordering sigma_star;
  std::uint64_t rounds = 0;
  std::vector<std::uint64_t> processed_counts;  // per vertex
  /// Per layer: largest |N_{H_i}(w) ∩ {later under sigma_i} ∩ {collected}|
  /// over uncollected w at any collection instant.
  std::vector<std::size_t> claim5_max;
  /// Times that count exceeded (A / a_i) * w_i.
  std::size_t claim5_violations = 0;
};

CollectTrace collect_ordering(const PreparedInstance& prepared, const CollectOptions& options = {});

struct LayerBound {
  unsigned r = 0;
  std::uint64_t a = 0;
  std::size_t w = 0;
  std::size_t lhs = 0;  // scol_r(G_i, sigma*)
  std::uint64_t rhs_num = 0, rhs_den = 1;  // (A/a) w^2 + w in lowest terms
  bool ok = false;
};

std::vector<LayerBound> verify_thm41_bound(const PreparedInstance& prepared, const Ordering& sigma_star);

/// Per-layer check of the three-way split of S_{r_i}(G_i, sigma*, w) \ {w}
/// by where the sigma_i-earliest vertex of a witnessing path sits.
struct PartitionAudit {
  std::size_t max_x1 = 0, max_x2 = 0, max_x3 = 0;
  std::size_t bound_x1 = 0;     // w_i - 1
  Rational bound_x2, bound_x3;  // (A/a_i) w_i and (w_i - 1)(A/a_i) w_i
  bool ok = false;
};

std::vector<PartitionAudit> audit_partition(const PreparedInstance& prepared, const Ordering& sigma_star);

/// Ordering source for a layer; called with the layer graph and radius 2r_i.
using SigmaProvider = std::function<Ordering(const Graph&, Radius)>;

SigmaProvider exact_sigma_provider(std::size_t cap = kDefaultExactCap);
SigmaProvider degeneracy_sigma_provider();
SigmaProvider fixed_sigma_provider(Ordering sigma);

/// One bound check of a wrapper theorem: lhs <= bound.
struct RadiusCheck {
  unsigned r = 0;
  std::size_t lhs = 0;
  std::size_t w = 0;
  Rational bound;
  bool ok = false;
};

struct UniformRun {
  std::string mode;  // "instance", "dyadic", "eps", "multi"
  std::size_t k = 0;
  std::vector<std::uint64_t> weights;
  std::uint64_t total_weight = 0;
  Ordering sigma_star;
  std::optional<PreparedInstance> prepared;  // empty when the run is vacuous
  std::optional<CollectTrace> trace;
  std::vector<LayerBound> layers;
  std::vector<RadiusCheck> checks;
  std::vector<PartitionAudit> audit;
  std::optional<Rational> eps;
  bool ok = true;
};

struct UniformOptions {
  CollectOptions collect;
  bool audit = false;
};

/// Runs the collecting walk on an explicit instance and checks every layer.
UniformRun run_instance(UniformInstance instance, const UniformOptions& options = {});

/// k = floor(log2(n - 2)); weights a_i = 2^(k-i). Returns (k, weights);
/// k = 0 for n <= 3.
std::pair<std::size_t, std::vector<std::uint64_t>> dyadic_weights(std::size_t n);

/// Smallest k >= 1 with (1+eps)^(k+2)/eps^2 + 1 >= n, and
/// a_i = ceil((1+eps)^(k+1-i) - 1).
std::pair<std::size_t, std::vector<std::uint64_t>> eps_weights(std::size_t n, const Rational& eps);

/// Single graph, all radii: layers (G, i, 2^(k-i)); checks
/// scol_i(G, sigma*) <= (2^i + 1) w_i^2 for i in [1, k].
UniformRun uniform_single(const Graph& g, const SigmaProvider& provider, const UniformOptions& options = {});

/// As uniform_single with eps-weights; checks
/// scol_i(G, sigma*) <= ((1+eps)^(i+1)/eps^2 + 1) w_i^2.
UniformRun uniform_single_eps(const Graph& g, const Rational& eps, const SigmaProvider& provider,
                              const UniformOptions& options = {});

/// Several graphs on one vertex set, all a_i = 1; checks
/// scol_{r_i}(G_i, sigma*) <= (k + 1) w_i^2.
UniformRun uniform_multi(const std::vector<std::pair<Graph, unsigned>>& pairs, const SigmaProvider& provider,
                         const UniformOptions& options = {});

}  // namespace colnum
