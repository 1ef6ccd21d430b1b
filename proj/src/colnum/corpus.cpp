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

#include "colnum/corpus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "colnum/error.hpp"

namespace colnum {

namespace {

constexpr std::size_t kMaxCorpusVertices = 7;

using EdgeMask = std::uint32_t;  // 21 bits suffice for n = 7

std::size_t edge_index(std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;  // triangular layout, independent of n
}

class Canonicalizer {
 public:
  explicit Canonicalizer(std::size_t n) : n_(n), edges_(n * (n - 1) / 2) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::uint8_t> map(edges_);
      for (std::size_t v = 1; v < n; ++v)
        for (std::size_t u = 0; u < v; ++u) map[edge_index(u, v)] = static_cast<std::uint8_t>(edge_index(perm[u], perm[v]));
      maps_.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  EdgeMask canonical(EdgeMask m) const {
    EdgeMask best = ~EdgeMask{0};
    for (const auto& map : maps_) {
      EdgeMask img = 0;
      for (EdgeMask s = m; s; s &= s - 1) img |= EdgeMask{1} << map[static_cast<std::size_t>(__builtin_ctz(s))];
      best = std::min(best, img);
    }
    return best;
  }

 private:
  std::size_t n_;
  std::size_t edges_;
  std::vector<std::vector<std::uint8_t>> maps_;
};

Graph from_mask(std::size_t n, EdgeMask m) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (m & (EdgeMask{1} << edge_index(u, v))) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// Canonical masks per vertex count; every graph on n vertices is some graph
// on n-1 vertices plus one vertex with an arbitrary neighbourhood.
std::vector<EdgeMask> canonical_masks(std::size_t n, const std::vector<EdgeMask>& smaller) {
  if (n == 1) return {0};
  Canonicalizer canon(n);
  std::set<EdgeMask> found;
  for (EdgeMask base : smaller) {
    for (EdgeMask nbrs = 0; nbrs < (EdgeMask{1} << (n - 1)); ++nbrs) {
      EdgeMask m = base;
      for (std::size_t u = 0; u + 1 < n; ++u)
        if (nbrs & (EdgeMask{1} << u)) m |= EdgeMask{1} << edge_index(u, n - 1);
      found.insert(canon.canonical(m));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

const std::vector<Graph>& nonisomorphic_graphs(std::size_t n) {
  if (n < 1 || n > kMaxCorpusVertices) throw_invalid("corpus supports 1..7 vertices");
  static std::mutex mu;
  static std::array<std::vector<EdgeMask>, kMaxCorpusVertices + 1> masks;
  static std::array<std::vector<Graph>, kMaxCorpusVertices + 1> graphs;
  std::lock_guard<std::mutex> lock(mu);
  for (std::size_t k = 1; k <= n; ++k) {
    if (!graphs[k].empty()) continue;
    masks[k] = canonical_masks(k, masks[k - 1]);
    for (EdgeMask m : masks[k]) graphs[k].push_back(from_mask(k, m));
  }
  return graphs[n];
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnreachable; });
}

Graph random_graph(CounterRng& rng, std::size_t n, std::uint64_t num, std::uint64_t den) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(num, den)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Ordering random_ordering(CounterRng& rng, std::size_t n) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  rng.shuffle(seq);
  return Ordering(std::move(seq));
}

}  // namespace colnum
