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

#include "colnum/naive_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace colnum::naive {

std::vector<Vertex> weak_set(const Graph& g, const Ordering& sigma, Vertex x, std::size_t max_len) {
  std::set<Vertex> found;
  for_each_simple_path(g, x, max_len, [&](const std::vector<Vertex>& p) {
    Vertex y = p.back();
    if (sigma.rank(y) > sigma.rank(x)) return;
    for (Vertex v : p)
      if (sigma.rank(v) < sigma.rank(y)) return;
    found.insert(y);
  });
  return {found.begin(), found.end()};
}

std::vector<Vertex> strong_set(const Graph& g, const Ordering& sigma, Vertex x, std::size_t max_len) {
  std::set<Vertex> found;
  for_each_simple_path(g, x, max_len, [&](const std::vector<Vertex>& p) {
    Vertex y = p.back();
    if (sigma.rank(y) > sigma.rank(x)) return;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (sigma.rank(p[i]) < sigma.rank(x)) return;
    found.insert(y);
  });
  return {found.begin(), found.end()};
}

namespace {

std::size_t best_packing(const std::vector<std::vector<Vertex>>& paths, std::size_t from,
                         std::vector<bool>& used) {
  std::size_t best = 0;
  for (std::size_t i = from; i < paths.size(); ++i) {
    const auto& p = paths[i];
    bool ok = std::none_of(p.begin() + 1, p.end(), [&](Vertex v) { return used[v]; });
    if (!ok) continue;
    for (auto it = p.begin() + 1; it != p.end(); ++it) used[*it] = true;
    best = std::max(best, 1 + best_packing(paths, i + 1, used));
    for (auto it = p.begin() + 1; it != p.end(); ++it) used[*it] = false;
  }
  return best;
}

}  // namespace

std::size_t back_connectivity(const Graph& g, const Ordering& sigma, Vertex x, std::size_t max_len) {
  std::vector<std::vector<Vertex>> paths;
  for_each_simple_path(g, x, max_len, [&](const std::vector<Vertex>& p) {
    if (p.size() >= 2 && sigma.rank(p.back()) < sigma.rank(x)) paths.push_back(p);
  });
  std::vector<bool> used(g.vertex_count());
  return best_packing(paths, 0, used);
}

std::size_t wcol(const Graph& g, const Ordering& sigma, std::size_t max_len) {
  std::size_t best = 0;
  for (Vertex x = 0; x < g.vertex_count(); ++x) best = std::max(best, weak_set(g, sigma, x, max_len).size());
  return best;
}

std::size_t scol(const Graph& g, const Ordering& sigma, std::size_t max_len) {
  std::size_t best = 0;
  for (Vertex x = 0; x < g.vertex_count(); ++x) best = std::max(best, strong_set(g, sigma, x, max_len).size());
  return best;
}

std::size_t adm(const Graph& g, const Ordering& sigma, std::size_t max_len) {
  std::size_t best = 0;
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    best = std::max(best, back_connectivity(g, sigma, x, max_len) + 1);
  return best;
}

std::size_t min_over_all_orderings(const Graph& g, std::size_t max_len, int kind) {
  std::vector<Vertex> seq(g.vertex_count());
  std::iota(seq.begin(), seq.end(), Vertex{0});
  std::size_t best = static_cast<std::size_t>(-1);
  do {
    Ordering sigma(seq);
    std::size_t v = kind == 0 ? wcol(g, sigma, max_len) : kind == 1 ? scol(g, sigma, max_len) : adm(g, sigma, max_len);
    best = std::min(best, v);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return best;
}

}  // namespace colnum::naive
