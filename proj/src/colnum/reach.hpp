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

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "colnum/graph.hpp"
#include "colnum/ordering.hpp"

namespace colnum {

enum class ReachKind { kWeak, kStrong, kAdm };

std::string_view to_string(ReachKind kind);
std::optional<ReachKind> parse_reach_kind(std::string_view s);

inline constexpr std::size_t kDefaultPathBudget = 1'000'000;

// Reachability sets. All returned sets are sorted by vertex id and contain x.
// Paths are simple; an infinite radius allows any length.

/// Weakly r-reachable vertices of x: y <=_sigma x joined to x by a path of
/// length <= r whose vertices are all >=_sigma y. Checked target by target.
std::vector<Vertex> weakly_reachable_set(const Graph& g, const Ordering& sigma, Vertex x, Radius r);

/// Strongly r-reachable vertices of x: y <=_sigma x joined to x by a path of
/// length <= r whose vertices other than y are all >=_sigma x.
std::vector<Vertex> strongly_reachable_set(const Graph& g, const Ordering& sigma, Vertex x, Radius r);

/// All weakly reachable sets at once, one bounded BFS per target vertex.
std::vector<std::vector<Vertex>> weakly_reachable_sets(const Graph& g, const Ordering& sigma, Radius r);
std::vector<std::vector<Vertex>> strongly_reachable_sets(const Graph& g, const Ordering& sigma, Radius r);

/// Position of a vertex relative to a fixed anchor x.
enum class Side : std::uint8_t { kEarlier, kAnchor, kLater };

/// Maximum number of paths from `x`, each of length in [1, max_len], ending
/// at a kEarlier vertex with all internal vertices kLater, pairwise disjoint
/// apart from x. Exact; throws Error(kBudgetExceeded) when the candidate
/// path count or search size exceeds `budget`.
std::size_t max_disjoint_back_paths(const Graph& g, Vertex x, std::span<const Side> side,
                                    std::size_t max_len, std::size_t budget = kDefaultPathBudget);

/// b_r[G, sigma, x] without the +1 for x itself.
std::size_t back_connectivity(const Graph& g, const Ordering& sigma, Vertex x, Radius r,
                              std::size_t budget = kDefaultPathBudget);

struct ReachReport {
  ReachKind kind = ReachKind::kWeak;
  Radius radius = Radius::infinity();
  std::vector<std::size_t> per_vertex;  // indexed by vertex id
  std::size_t value = 0;                // max of per_vertex (0 on the empty graph)
};

ReachReport wcol_of_ordering(const Graph& g, const Ordering& sigma, Radius r);
ReachReport scol_of_ordering(const Graph& g, const Ordering& sigma, Radius r);
/// per_vertex(x) = back_connectivity(x) + 1.
ReachReport adm_of_ordering(const Graph& g, const Ordering& sigma, Radius r,
                            std::size_t budget = kDefaultPathBudget);

ReachReport evaluate_ordering(const Graph& g, const Ordering& sigma, Radius r, ReachKind kind,
                              std::size_t budget = kDefaultPathBudget);

}  // namespace colnum
