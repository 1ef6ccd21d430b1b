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

#include <algorithm>
#include <set>

#include "colnum/corpus.hpp"
#include "colnum/example21.hpp"
#include "colnum/reach.hpp"
#include "colnum/rng.hpp"
#include "helpers.hpp"

using namespace colnum;
using namespace colnum::test;

TEST_CASE("vertex counts") {
  CHECK(build_example21({4, 4, 2, 4}).graph.vertex_count() == 124);
  CHECK(build_example21({4, 4, 1, 2}).graph.vertex_count() == 28);
  for (unsigned t = 4; t <= 5; ++t)
    for (unsigned n = t; n <= 6; ++n)
      for (unsigned r = 1; r <= 3; ++r)
        for (unsigned rp = r + 1; rp <= 5; ++rp) {
          Example21Params p{t, n, r, rp};
          CHECK(build_example21(p).graph.vertex_count() == p.vertex_count());
        }
}

TEST_CASE("parameter validation") {
  expect_error([] { build_example21({3, 4, 2, 4}); }, ErrorCode::kInvalidInput, "t must be at least 4");
  expect_error([] { build_example21({5, 4, 2, 4}); }, ErrorCode::kInvalidInput, "n must be at least t");
  expect_error([] { build_example21({4, 4, 2, 2}); }, ErrorCode::kInvalidInput, "r'");
  expect_error([] { build_example21({4, 4, 0, 2}); }, ErrorCode::kInvalidInput, "r must be positive");
}

TEST_CASE("structure of the construction") {
  auto g = build_example21({4, 5, 2, 5});
  const auto& p = g.params;
  // Z independent, hubs of degree 2t
  for (unsigned i = 1; i <= p.n; ++i)
    for (unsigned h = 1; h <= p.t; ++h)
      for (Vertex w : g.graph.neighbors(g.z(i, h))) CHECK(g.block[w] != Block::kZ);
  for (unsigned i = 1; i <= p.n; ++i)
    for (unsigned j = 1; j <= p.n; ++j)
      if (i != j) CHECK(g.graph.degree(g.x(i, j)) == 2 * p.t);
  // Y vertices are internal path vertices of degree 2
  for (Vertex v = 0; v < g.graph.vertex_count(); ++v)
    if (g.block[v] == Block::kY) CHECK(g.graph.degree(v) == 2);
  CHECK(g.labels[g.z(2, 3)] == "z_2^3");
  CHECK(g.labels[g.x(3, 1)] == "x_3,1");
  std::set<std::string> unique(g.labels.begin(), g.labels.end());
  CHECK(unique.size() == g.labels.size());
  CHECK(g.x_part(1).size() == 2 * (p.n - 1));
}

TEST_CASE("distances in the (4,4,2,4) instance") {
  auto g = build_example21({4, 4, 2, 4});
  CHECK(distance(g.graph, g.z(1, 1), g.z(2, 3)) == 4);
  // within one part the shortest route goes through a shared hub
  CHECK(distance(g.graph, g.z(1, 1), g.z(1, 2)) == 4);
  CHECK(*distance(g.graph, g.x(1, 2), g.x(3, 4)) > 4);
}

TEST_CASE("within-part distance is min(2r, 2(r' - r))") {
  for (auto p : {Example21Params{4, 4, 1, 3}, Example21Params{4, 4, 1, 4}, Example21Params{4, 5, 3, 4}}) {
    auto g = build_example21(p);
    CHECK(distance(g.graph, g.z(2, 1), g.z(2, 4)) == std::min(2 * p.r, 2 * (p.r_prime - p.r)));
  }
}

TEST_CASE("facts hold across parameters") {
  for (auto p : {Example21Params{4, 4, 2, 4}, Example21Params{4, 8, 2, 4}, Example21Params{4, 6, 1, 3},
                 Example21Params{4, 4, 1, 2}, Example21Params{5, 5, 2, 3}, Example21Params{4, 5, 3, 7}}) {
    auto facts = verify_facts(build_example21(p));
    CHECK(facts.e1);
    CHECK(facts.e2);
    CHECK(facts.e3);
    CHECK(facts.failures.empty());
  }
}

TEST_CASE("claim orderings") {
  auto g = build_example21({4, 4, 2, 4});
  auto [zxy, xzy] = claim_orderings(g);
  const std::size_t nz = 16, nx = 12;
  for (std::size_t i = 0; i < g.graph.vertex_count(); ++i) {
    Block expect_zxy = i < nz ? Block::kZ : i < nz + nx ? Block::kX : Block::kY;
    Block expect_xzy = i < nx ? Block::kX : i < nz + nx ? Block::kZ : Block::kY;
    CHECK(g.block[zxy.at(i)] == expect_zxy);
    CHECK(g.block[xzy.at(i)] == expect_xzy);
  }
  CHECK(zxy.at(0) == g.z(1, 1));
  CHECK(zxy.at(1) == g.z(1, 2));
  CHECK(xzy.at(0) == g.x(1, 2));
  CHECK(xzy.at(1) == g.x(1, 3));
}

TEST_CASE("claims on the acceptance instances") {
  auto g = build_example21({4, 8, 2, 4});
  auto c = verify_claims(g, 100, 7);
  CHECK(c.claim1_bound == 9);
  CHECK(c.claim2_bound == 26);
  CHECK(c.claim1_value <= 9);
  CHECK(c.claim2_value <= 26);
  CHECK(c.claim3_failures == 0);
  CHECK(c.samples == 100);
  CHECK(c.ok());
}

TEST_CASE("claim 3 thresholds are compared exactly") {
  Example21Params p{4, 8, 2, 4};
  // .246 * 8 = 1.968 and .754 * 32 = 24.128
  CHECK(claim3_holds(p, 2, 0));
  CHECK_FALSE(claim3_holds(p, 1, 24));
  CHECK(claim3_holds(p, 1, 25));
  Example21Params q{4, 1000, 1, 2};
  CHECK(claim3_holds(q, 246, 0));
  CHECK_FALSE(claim3_holds(q, 245, 0));
}

TEST_CASE("claim sampling is reproducible") {
  auto g = build_example21({4, 4, 1, 3});
  auto a = verify_claims(g, 20, 42);
  auto b = verify_claims(g, 20, 42);
  CHECK(a.claim3_min_scol_r == b.claim3_min_scol_r);
  CHECK(a.claim3_max_scol_rp == b.claim3_max_scol_rp);
}

TEST_CASE("deleting an edge never raises scol under a fixed ordering") {
  auto g = build_example21({4, 4, 1, 3});
  CounterRng rng(6);
  Ordering sigma = random_ordering(rng, g.graph.vertex_count());
  const auto& p = g.params;
  auto base_r = scol_of_ordering(g.graph, sigma, Radius(p.r)).per_vertex;
  auto base_rp = scol_of_ordering(g.graph, sigma, Radius(p.r_prime)).per_vertex;
  for (int i = 0; i < 15; ++i) {
    const auto& e = g.graph.edges()[rng.below(g.graph.edge_count())];
    Graph smaller = g.graph.without_edge(e.first, e.second);
    auto sr = scol_of_ordering(smaller, sigma, Radius(p.r)).per_vertex;
    auto srp = scol_of_ordering(smaller, sigma, Radius(p.r_prime)).per_vertex;
    for (std::size_t v = 0; v < sr.size(); ++v) {
      CHECK(sr[v] <= base_r[v]);
      CHECK(srp[v] <= base_rp[v]);
    }
  }
}
