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

#include "colnum/corpus.hpp"
#include "colnum/naive_oracle.hpp"
#include "colnum/reach.hpp"
#include "colnum/rng.hpp"
#include "helpers.hpp"

using namespace colnum;
using namespace colnum::test;

namespace {

bool subset_of(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Star center last.
Ordering center_last(std::size_t leaves) {
  std::vector<Vertex> seq;
  for (Vertex v = 1; v <= leaves; ++v) seq.push_back(v);
  seq.push_back(0);
  return Ordering(seq);
}

}  // namespace

TEST_CASE("weakly reachable sets") {
  Graph p4 = Graph::path(4);
  Ordering id = Ordering::identity(4);
  CHECK(weakly_reachable_set(p4, id, 2, Radius(2)) == ids({0, 1, 2}));
  CHECK(weakly_reachable_set(p4, id, 0, Radius::infinity()) == ids({0}));

  Graph star = Graph::star(4);
  CHECK(weakly_reachable_set(star, center_last(4), 0, Radius(1)) == ids({0, 1, 2, 3, 4}));

  CounterRng rng(21);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_graph(rng, 8, 1, 3);
    Ordering o = random_ordering(rng, 8);
    Vertex first = o.at(0);
    CHECK(weakly_reachable_set(g, o, first, Radius::infinity()) == ids({first}));
  }
}

TEST_CASE("strongly reachable sets") {
  Graph p4 = Graph::path(4);
  Ordering id = Ordering::identity(4);
  CHECK(strongly_reachable_set(p4, id, 2, Radius(2)) == ids({1, 2}));
  CHECK(strongly_reachable_set(Graph::cycle(5), Ordering::identity(5), 3, Radius(2)) == ids({0, 2, 3}));
  Graph k4 = Graph::complete(4);
  CHECK(strongly_reachable_set(k4, make_ordering({2, 0, 3, 1}), 1, Radius(1)) == ids({0, 1, 2, 3}));
}

TEST_CASE("per-ordering coloring numbers") {
  Graph p4 = Graph::path(4);
  Ordering id = Ordering::identity(4);
  CHECK(wcol_of_ordering(p4, id, Radius(2)).value == 3);
  CHECK(scol_of_ordering(p4, id, Radius(2)).value == 2);
  auto w = wcol_of_ordering(p4, id, Radius(2));
  CHECK(w.per_vertex == std::vector<std::size_t>{1, 2, 3, 3});
  CHECK(w.kind == ReachKind::kWeak);
  CHECK(w.radius == Radius(2));

  Graph k4 = Graph::complete(4);
  CHECK(wcol_of_ordering(k4, make_ordering({3, 1, 0, 2}), Radius(1)).value == 4);
  CHECK(scol_of_ordering(k4, make_ordering({3, 1, 0, 2}), Radius(1)).value == 4);

  Graph one(1, {});
  for (Radius r : {Radius(1), Radius(5), Radius::infinity()}) {
    CHECK(wcol_of_ordering(one, Ordering::identity(1), r).value == 1);
    CHECK(scol_of_ordering(one, Ordering::identity(1), r).value == 1);
    CHECK(adm_of_ordering(one, Ordering::identity(1), r).value == 1);
  }
  Graph empty(0, {});
  CHECK(wcol_of_ordering(empty, Ordering::identity(0), Radius(1)).value == 0);
}

TEST_CASE("back-connectivity") {
  Graph star = Graph::star(4);
  CHECK(back_connectivity(star, center_last(4), 0, Radius(1)) == 4);
  CHECK(back_connectivity(Graph::path(5), Ordering::identity(5), 2, Radius(2)) == 1);
  Graph iso(3, {});
  CHECK(back_connectivity(iso, Ordering::identity(3), 1, Radius(3)) == 0);

  // Two disjoint routes to earlier vertices through later ones.
  //   x=2 reaches 0 via 3 and 1 via 4; the direct edge 2-0 shares the end 0.
  Graph g = make_graph(5, {{2, 3}, {3, 0}, {2, 4}, {4, 1}, {2, 0}});
  Ordering id = Ordering::identity(5);
  CHECK(back_connectivity(g, id, 2, Radius(1)) == 1);
  CHECK(back_connectivity(g, id, 2, Radius(2)) == 2);
}

TEST_CASE("admissibility") {
  CHECK(adm_of_ordering(Graph::star(4), center_last(4), Radius(1)).value == 5);
  CHECK(adm_of_ordering(Graph::path(4), Ordering::identity(4), Radius(1)).value == 2);
}

TEST_CASE("path budget is enforced") {
  Graph k = Graph::complete(10);
  Ordering o = Ordering::identity(10);
  expect_error([&] { back_connectivity(k, o, 4, Radius(4), 50); }, ErrorCode::kBudgetExceeded, "");
  CHECK(back_connectivity(k, o, 4, Radius(4)) == 4);
}

TEST_CASE("invalid inputs") {
  Graph p = Graph::path(3);
  expect_error([&] { weakly_reachable_set(p, Ordering::identity(3), 3, Radius(1)); }, ErrorCode::kInvalidInput,
               "invalid vertex");
  expect_error([&] { scol_of_ordering(p, Ordering::identity(2), Radius(1)); }, ErrorCode::kInvalidInput,
               "ordering has 2 entries");
  CHECK(parse_reach_kind("wcol") == ReachKind::kWeak);
  CHECK(parse_reach_kind("strong") == ReachKind::kStrong);
  CHECK(parse_reach_kind("adm") == ReachKind::kAdm);
  CHECK_FALSE(parse_reach_kind("medium").has_value());
}

TEST_CASE("set invariants on random graphs") {
  CounterRng rng(77);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = rng.between(1, 11);
    Graph g = random_graph(rng, n, 1, 3);
    Ordering o = random_ordering(rng, n);
    for (Vertex x = 0; x < n; ++x) {
      std::vector<Vertex> prev_w, prev_s;
      for (unsigned r = 1; r <= n + 1; ++r) {
        auto w = weakly_reachable_set(g, o, x, Radius(r));
        auto s = strongly_reachable_set(g, o, x, Radius(r));
        CHECK(std::binary_search(w.begin(), w.end(), x));
        CHECK(std::binary_search(s.begin(), s.end(), x));
        CHECK(subset_of(s, w));
        CHECK(subset_of(prev_w, w));
        CHECK(subset_of(prev_s, s));
        if (r + 1 >= n) {
          CHECK(w == weakly_reachable_set(g, o, x, Radius::infinity()));
          CHECK(s == strongly_reachable_set(g, o, x, Radius::infinity()));
        }
        prev_w = std::move(w);
        prev_s = std::move(s);
      }
    }
  }
}

TEST_CASE("fast routes agree with the path-enumeration oracle on random graphs") {
  CounterRng rng(1234);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = rng.between(2, 8);
    Graph g = random_graph(rng, n, rng.between(1, 3), 4);
    Ordering o = random_ordering(rng, n);
    for (unsigned r : {1u, 2u, 3u, 4u}) {
      CHECK(wcol_of_ordering(g, o, Radius(r)).value == naive::wcol(g, o, r));
      CHECK(scol_of_ordering(g, o, Radius(r)).value == naive::scol(g, o, r));
      CHECK(adm_of_ordering(g, o, Radius(r)).value == naive::adm(g, o, r));
    }
  }
}

TEST_CASE("r = 1 collapse and the sandwich per ordering") {
  CounterRng rng(99);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = rng.between(1, 12);
    Graph g = random_graph(rng, n, 1, 3);
    Ordering o = random_ordering(rng, n);
    auto w1 = wcol_of_ordering(g, o, Radius(1));
    CHECK(w1.per_vertex == scol_of_ordering(g, o, Radius(1)).per_vertex);
    CHECK(w1.per_vertex == adm_of_ordering(g, o, Radius(1)).per_vertex);
    for (unsigned r = 1; r <= 4; ++r) {
      std::size_t w = wcol_of_ordering(g, o, Radius(r)).value;
      std::size_t s = scol_of_ordering(g, o, Radius(r)).value;
      std::size_t a = adm_of_ordering(g, o, Radius(r)).value;
      std::size_t sr = 1;
      for (unsigned k = 0; k < r; ++k) sr *= s;
      CHECK(a <= s);
      CHECK(s <= w);
      CHECK(w <= sr);
    }
  }
}

TEST_CASE("evaluate_ordering dispatches on kind") {
  Graph p4 = Graph::path(4);
  Ordering id = Ordering::identity(4);
  CHECK(evaluate_ordering(p4, id, Radius(2), ReachKind::kWeak).value == 3);
  CHECK(evaluate_ordering(p4, id, Radius(2), ReachKind::kStrong).value == 2);
  CHECK(evaluate_ordering(p4, id, Radius(2), ReachKind::kAdm).value == 2);
}
