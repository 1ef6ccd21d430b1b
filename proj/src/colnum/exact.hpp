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

#include "colnum/graph.hpp"
#include "colnum/ordering.hpp"
#include "colnum/reach.hpp"

namespace colnum {

inline constexpr std::size_t kDefaultExactCap = 10;
// Bitmask width; caps above this are rejected outright.
inline constexpr std::size_t kMaxExactVertices = 64;

struct ExactOptions {
  std::size_t cap = kDefaultExactCap;
  bool prune = true;  // false: plain enumeration of all n! orderings
  std::size_t path_budget = kDefaultPathBudget;
};

struct ExactResult {
  ReachKind kind = ReachKind::kWeak;
  Radius radius = Radius::infinity();
  std::size_t value = 0;
  Ordering witness;
  std::uint64_t explored = 0;  // complete orderings evaluated
};

/// Minimum of wcol_r / scol_r / adm_r over all orderings of g.
///
/// Orderings are built front to back. A vertex's reachable-set size is fixed
/// once it is placed (for weak reachability, each placed vertex also adds to
/// lower bounds on the vertices it reaches), so a prefix is dropped as soon
/// as its partial maximum reaches the incumbent. Throws Error(kCapExceeded)
/// when n > options.cap.
ExactResult exact_min(const Graph& g, Radius r, ReachKind kind, const ExactOptions& options = {});

/// Treewidth by dynamic programming over eliminated vertex sets: eliminating
/// v after the set S costs its degree in the graph where S has been
/// eliminated (with fill-in). Independent of the reachability code.
std::size_t treewidth_oracle(const Graph& g, std::size_t cap = kDefaultExactCap);

/// Treedepth via td = max over components, td(connected G) = 1 + min_v td(G - v).
std::size_t treedepth_oracle(const Graph& g, std::size_t cap = kDefaultExactCap);

/// Smallest-last ordering: repeatedly remove a minimum-degree vertex (lowest
/// id on ties) and place it after all still-unplaced vertices.
Ordering degeneracy_ordering(const Graph& g);

}  // namespace colnum
