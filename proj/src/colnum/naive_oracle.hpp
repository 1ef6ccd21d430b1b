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

// Brute-force reference implementations. Everything here enumerates every
// simple path explicitly and shares no code with reach.cpp or exact.cpp, so
// it can serve as an oracle for both. Only usable on tiny graphs.

#include <vector>

#include "colnum/graph.hpp"
#include "colnum/ordering.hpp"

namespace colnum::naive {

/// Calls `visit(path)` for every simple path starting at `x` with
/// 0..max_len edges. `path` lists the vertices, x first.
template <typename Visit>
void for_each_simple_path(const Graph& g, Vertex x, std::size_t max_len, Visit&& visit) {
  std::vector<Vertex> path{x};
  std::vector<bool> on_path(g.vertex_count());
  on_path[x] = true;
  auto rec = [&](auto&& self) -> void {
    visit(static_cast<const std::vector<Vertex>&>(path));
    if (path.size() - 1 == max_len) return;
    for (Vertex w : g.neighbors(path.back())) {
      if (on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      self(self);
      path.pop_back();
      on_path[w] = false;
    }
  };
  rec(rec);
}

std::vector<Vertex> weak_set(const Graph& g, const Ordering& sigma, Vertex x, std::size_t max_len);
std::vector<Vertex> strong_set(const Graph& g, const Ordering& sigma, Vertex x, std::size_t max_len);

/// Maximum family of x-anchored paths (length 1..max_len, other end earlier
/// than x) disjoint apart from x. Internal vertices are unrestricted here.
std::size_t back_connectivity(const Graph& g, const Ordering& sigma, Vertex x, std::size_t max_len);

std::size_t wcol(const Graph& g, const Ordering& sigma, std::size_t max_len);
std::size_t scol(const Graph& g, const Ordering& sigma, std::size_t max_len);
std::size_t adm(const Graph& g, const Ordering& sigma, std::size_t max_len);

/// Minimum over all n! orderings, no pruning. kind: 0 weak, 1 strong, 2 adm.
std::size_t min_over_all_orderings(const Graph& g, std::size_t max_len, int kind);

}  // namespace colnum::naive
