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

#include "colnum/example21.hpp"

#include <algorithm>

#include "colnum/corpus.hpp"
#include "colnum/error.hpp"
#include "colnum/reach.hpp"
#include "colnum/rng.hpp"

namespace colnum {

void Example21Params::validate() const {
  if (t < 4) throw_invalid("t must be at least 4");
  if (n < t) throw_invalid("n must be at least t");
  if (r < 1) throw_invalid("r must be positive");
  if (r_prime <= r) throw_invalid("r' must exceed r");
}

std::size_t Example21Params::vertex_count() const {
  std::size_t nn = n, tt = t;
  return nn * tt + nn * (nn - 1) * (1 + tt * (r_prime - 2));
}

Vertex Example21Graph::z(unsigned i, unsigned h) const {
  return static_cast<Vertex>((i - 1) * params.t + (h - 1));
}

Vertex Example21Graph::x(unsigned i, unsigned j) const {
  // hubs follow Z, ordered by (i, j) with j != i
  std::size_t pos = (i - 1) * (params.n - 1) + (j < i ? j - 1 : j - 2);
  return static_cast<Vertex>(params.n * params.t + pos);
}

std::vector<Vertex> Example21Graph::z_part(unsigned i) const {
  std::vector<Vertex> out;
  for (unsigned h = 1; h <= params.t; ++h) out.push_back(z(i, h));
  return out;
}

std::vector<Vertex> Example21Graph::x_part(unsigned i) const {
  std::vector<Vertex> out;
  for (unsigned j = 1; j <= params.n; ++j) {
    if (j == i) continue;
    out.push_back(x(i, j));
    out.push_back(x(j, i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Example21Graph build_example21(const Example21Params& p) {
  p.validate();
  Example21Graph g;
  g.params = p;
  std::vector<Edge> edges;

  auto add_vertex = [&](std::string label, Block b) {
    g.labels.push_back(std::move(label));
    g.block.push_back(b);
    return static_cast<Vertex>(g.labels.size() - 1);
  };
  for (unsigned i = 1; i <= p.n; ++i)
    for (unsigned h = 1; h <= p.t; ++h) add_vertex("z_" + std::to_string(i) + "^" + std::to_string(h), Block::kZ);
  for (unsigned i = 1; i <= p.n; ++i)
    for (unsigned j = 1; j <= p.n; ++j)
      if (i != j) add_vertex("x_" + std::to_string(i) + "," + std::to_string(j), Block::kX);

  // Path from `from` to `to` of the given length through fresh Y vertices.
  auto add_path = [&](Vertex from, Vertex to, unsigned length, const std::string& stem) {
    Vertex prev = from;
    for (unsigned s = 1; s < length; ++s) {
      Vertex y = add_vertex(stem + "." + std::to_string(s), Block::kY);
      edges.emplace_back(prev, y);
      prev = y;
    }
    edges.emplace_back(prev, to);
  };
  for (unsigned i = 1; i <= p.n; ++i) {
    for (unsigned j = 1; j <= p.n; ++j) {
      if (i == j) continue;
      const std::string pair = std::to_string(i) + "," + std::to_string(j);
      for (unsigned h = 1; h <= p.t; ++h) {
        const std::string hs = "^" + std::to_string(h);
        add_path(g.z(i, h), g.x(i, j), p.r, "p_" + pair + hs);
        add_path(g.x(i, j), g.z(j, h), p.r_prime - p.r, "q_" + pair + hs);
      }
    }
  }
  g.graph = Graph(g.labels.size(), edges);
  if (g.graph.vertex_count() != p.vertex_count())
    throw Error(ErrorCode::kCheckFailed, "example graph has an unexpected vertex count");
  return g;
}

Example21Facts verify_facts(const Example21Graph& g) {
  const auto& p = g.params;
  const std::size_t nv = g.graph.vertex_count();
  Example21Facts facts;
  auto fail = [&](std::string what) {
    if (facts.failures.size() < 16) facts.failures.push_back(std::move(what));
  };

  facts.e1 = true;
  for (unsigned i = 1; i <= p.n; ++i) {
    for (unsigned h = 1; h <= p.t; ++h) {
      auto dist = bfs_distances(g.graph, g.z(i, h));
      for (unsigned j = 1; j <= p.n; ++j) {
        if (j == i) continue;
        for (unsigned h2 = 1; h2 <= p.t; ++h2) {
          if (dist[g.z(j, h2)] != p.r_prime) {
            facts.e1 = false;
            fail("E1: dist(" + g.labels[g.z(i, h)] + ", " + g.labels[g.z(j, h2)] + ") != r'");
          }
        }
      }
    }
  }

  facts.e2 = true;
  std::vector<bool> blocked(nv, false);
  for (Vertex v = 0; v < nv; ++v) blocked[v] = g.block[v] == Block::kX;
  for (Vertex zv = 0; zv < nv; ++zv) {
    if (g.block[zv] != Block::kZ) continue;
    Vertex src[] = {zv};
    auto dist = bfs_distances(g.graph, src, blocked);
    for (Vertex other = 0; other < nv; ++other) {
      if (other != zv && g.block[other] == Block::kZ && dist[other] != kUnreachable) {
        facts.e2 = false;
        fail("E2: " + g.labels[zv] + " reaches " + g.labels[other] + " avoiding X");
      }
    }
  }
  for (unsigned i = 1; i <= p.n; ++i) {
    for (unsigned j = i + 1; j <= p.n; ++j) {
      std::vector<bool> cut(nv, false);
      cut[g.x(i, j)] = cut[g.x(j, i)] = true;
      auto sources = g.z_part(i);
      auto dist = bfs_distances(g.graph, sources, cut);
      for (Vertex target : g.z_part(j)) {
        if (dist[target] != kUnreachable && dist[target] <= p.r_prime) {
          facts.e2 = false;
          fail("E2: Z_" + std::to_string(i) + " to Z_" + std::to_string(j) + " within r' avoiding both hubs");
        }
      }
    }
  }

  facts.e3 = true;
  for (unsigned i = 1; i <= p.n; ++i) {
    for (unsigned j = 1; j <= p.n; ++j) {
      if (i == j) continue;
      auto dist = bfs_distances(g.graph, g.x(i, j));
      auto xi = g.x_part(i), xj = g.x_part(j);
      for (Vertex v = 0; v < nv; ++v) {
        if (g.block[v] != Block::kX) continue;
        if (std::binary_search(xi.begin(), xi.end(), v) || std::binary_search(xj.begin(), xj.end(), v)) continue;
        if (dist[v] != kUnreachable && dist[v] <= p.r_prime) {
          facts.e3 = false;
          fail("E3: dist(" + g.labels[g.x(i, j)] + ", " + g.labels[v] + ") <= r'");
        }
      }
    }
  }
  return facts;
}

std::pair<Ordering, Ordering> claim_orderings(const Example21Graph& g) {
  std::vector<Vertex> zxy, xzy;
  for (Block b : {Block::kZ, Block::kX, Block::kY})
    for (Vertex v = 0; v < g.block.size(); ++v)
      if (g.block[v] == b) zxy.push_back(v);
  for (Block b : {Block::kX, Block::kZ, Block::kY})
    for (Vertex v = 0; v < g.block.size(); ++v)
      if (g.block[v] == b) xzy.push_back(v);
  return {Ordering(std::move(zxy)), Ordering(std::move(xzy))};
}

bool claim3_holds(const Example21Params& p, std::size_t scol_r, std::size_t scol_rp) {
  const std::uint64_t n = p.n, t = p.t;
  return 1000 * scol_r >= 246 * n || 1000 * scol_rp >= 754 * n * t;
}

Example21Claims verify_claims(const Example21Graph& g, std::size_t samples, std::uint64_t seed) {
  const auto& p = g.params;
  Example21Claims c;
  auto [zxy, xzy] = claim_orderings(g);
  c.claim1_bound = 2 * p.t + 1;
  c.claim1_value = scol_of_ordering(g.graph, zxy, Radius(p.r)).value;
  c.claim1 = c.claim1_value <= c.claim1_bound;
  c.claim2_bound = 4 * static_cast<std::size_t>(p.n) - 6;
  c.claim2_value = scol_of_ordering(g.graph, xzy, Radius(p.r_prime)).value;
  c.claim2 = c.claim2_value <= c.claim2_bound;

  CounterRng rng(seed);
  c.samples = samples;
  c.claim3_min_scol_r = c.claim3_min_scol_rp = static_cast<std::size_t>(-1);
  for (std::size_t s = 0; s < samples; ++s) {
    CounterRng stream = rng.fork(s);
    Ordering sigma = random_ordering(stream, g.graph.vertex_count());
    std::size_t a = scol_of_ordering(g.graph, sigma, Radius(p.r)).value;
    std::size_t b = scol_of_ordering(g.graph, sigma, Radius(p.r_prime)).value;
    if (!claim3_holds(p, a, b)) ++c.claim3_failures;
    c.claim3_min_scol_r = std::min(c.claim3_min_scol_r, a);
    c.claim3_min_scol_rp = std::min(c.claim3_min_scol_rp, b);
    c.claim3_max_scol_r = std::max(c.claim3_max_scol_r, a);
    c.claim3_max_scol_rp = std::max(c.claim3_max_scol_rp, b);
  }
  if (samples == 0) c.claim3_min_scol_r = c.claim3_min_scol_rp = 0;
  return c;
}

}  // namespace colnum
