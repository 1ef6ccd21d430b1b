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

#include <vector>

#include "colnum/graph.hpp"
#include "colnum/ordering.hpp"
#include "colnum/rng.hpp"

namespace colnum {

/// One representative per isomorphism class of graphs on exactly n vertices
/// (1 <= n <= 7), in a fixed deterministic order. Computed once and cached.
const std::vector<Graph>& nonisomorphic_graphs(std::size_t n);

bool is_connected(const Graph& g);

/// G(n, p) with p = num/den.
Graph random_graph(CounterRng& rng, std::size_t n, std::uint64_t num, std::uint64_t den);

Ordering random_ordering(CounterRng& rng, std::size_t n);

}  // namespace colnum
