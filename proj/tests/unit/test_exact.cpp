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

#include <map>
#include <string>

#include "colnum/corpus.hpp"
#include "colnum/exact.hpp"
#include "colnum/naive_oracle.hpp"
#include "colnum/reach.hpp"
#include "colnum/rng.hpp"
#include "helpers.hpp"

using namespace colnum;
using namespace colnum::test;

namespace {

struct Frozen {
  const char* name;
  Graph graph;
  // weak, strong, adm at r = 1, 2, 3, then weak and strong at inf
  std::size_t w[3], s[3], a[3], w_inf, s_inf, tw, td;
};

// Values from tests/oracles/derive.py (plain enumeration of all orderings
// and all simple paths, written independently of the library).
std::vector<Frozen> frozen() {
  return {
      {"P5", Graph::path(5), {2, 3, 3}, {2, 2, 2}, {2, 2, 2}, 3, 2, 1, 3},
      {"C6", Graph::cycle(6), {3, 3, 4}, {3, 3, 3}, {3, 3, 3}, 4, 3, 2, 4},
      {"K23", make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}), {3, 3, 3}, {3, 3, 3}, {3, 3, 3}, 3, 3,
       2, 3},
      {"W5", make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}}),
       {4, 5, 5}, {4, 4, 4}, {4, 4, 4}, 5, 4, 3, 5},
      {"house", make_graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}), {3, 4, 4}, {3, 3, 3}, {3, 3, 3}, 4,
       3, 2, 4},
  };
}

}  // namespace

TEST_CASE("exact optimum: small examples") {
  CHECK(exact_min(Graph::cycle(5), Radius(2), ReachKind::kStrong).value == 3);
  for (Radius r : {Radius(1), Radius(2), Radius(3), Radius::infinity()})
    CHECK(exact_min(Graph::complete(4), r, ReachKind::kStrong).value == 4);
  CHECK(exact_min(Graph::path(4), Radius(1), ReachKind::kStrong).value == 2);
  CHECK(exact_min(Graph(1, {}), Radius(1), ReachKind::kWeak).value == 1);
  auto empty = exact_min(Graph(0, {}), Radius(1), ReachKind::kWeak);
  CHECK(empty.value == 0);
}

TEST_CASE("exact optimum matches frozen brute-force values") {
  for (const auto& f : frozen()) {
    CAPTURE(f.name);
    for (unsigned r = 1; r <= 3; ++r) {
      CAPTURE(r);
      CHECK(exact_min(f.graph, Radius(r), ReachKind::kWeak).value == f.w[r - 1]);
      CHECK(exact_min(f.graph, Radius(r), ReachKind::kStrong).value == f.s[r - 1]);
      CHECK(exact_min(f.graph, Radius(r), ReachKind::kAdm).value == f.a[r - 1]);
    }
    CHECK(exact_min(f.graph, Radius::infinity(), ReachKind::kWeak).value == f.w_inf);
    CHECK(exact_min(f.graph, Radius::infinity(), ReachKind::kStrong).value == f.s_inf);
    CHECK(treewidth_oracle(f.graph) == f.tw);
    CHECK(treedepth_oracle(f.graph) == f.td);
  }
}

TEST_CASE("cube: treewidth 3, treedepth 5") {
  Graph q3 = make_graph(8, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
  CHECK(treewidth_oracle(q3) == 3);
  CHECK(treedepth_oracle(q3) == 5);
  CHECK(exact_min(q3, Radius::infinity(), ReachKind::kStrong).value == 4);
  CHECK(exact_min(q3, Radius::infinity(), ReachKind::kWeak).value == 5);
}

TEST_CASE("witness orderings reproduce the optimum") {
  CounterRng rng(5);
  for (int i = 0; i < 25; ++i) {
    const std::size_t n = rng.between(2, 9);
    Graph g = random_graph(rng, n, 1, 3);
    for (int k = 0; k < 3; ++k) {
      auto kind = static_cast<ReachKind>(k);
      for (Radius r : {Radius(1), Radius(2), Radius(4), Radius::infinity()}) {
        if (kind == ReachKind::kAdm && r.is_infinite()) continue;
        auto res = exact_min(g, r, kind);
        CHECK(res.kind == kind);
        CHECK(res.radius == r);
        CHECK(res.explored >= 1);
        CHECK(evaluate_ordering(g, res.witness, r, kind).value == res.value);
      }
    }
  }
}

TEST_CASE("pruned search agrees with plain enumeration and the naive minimum") {
  CounterRng rng(8);
  ExactOptions plain;
  plain.prune = false;
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = rng.between(1, 6);
    Graph g = random_graph(rng, n, rng.between(1, 3), 4);
    for (unsigned r = 1; r <= 3; ++r) {
      for (int k = 0; k < 3; ++k) {
        auto kind = static_cast<ReachKind>(k);
        auto pruned = exact_min(g, Radius(r), kind);
        auto full = exact_min(g, Radius(r), kind, plain);
        CHECK(pruned.value == full.value);
        if (n >= 2) CHECK(full.explored == [&] { std::uint64_t f = 1; for (std::size_t j = 2; j <= n; ++j) f *= j; return f; }());
        if (n <= 5) CHECK(pruned.value == naive::min_over_all_orderings(g, r, k));
      }
    }
  }
}

TEST_CASE("graph-level sandwich and monotonicity") {
  CounterRng rng(13);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = rng.between(2, 7);
    Graph g = random_graph(rng, n, 1, 2);
    std::size_t prev_w = 0, prev_s = 0;
    for (unsigned r = 1; r <= 3; ++r) {
      std::size_t w = exact_min(g, Radius(r), ReachKind::kWeak).value;
      std::size_t s = exact_min(g, Radius(r), ReachKind::kStrong).value;
      std::size_t a = exact_min(g, Radius(r), ReachKind::kAdm).value;
      std::size_t sr = 1;
      for (unsigned k = 0; k < r; ++k) sr *= s;
      CHECK(a <= s);
      CHECK(s <= w);
      CHECK(w <= sr);
      if (r == 1) {
        CHECK(a == s);
        CHECK(s == w);
      }
      CHECK(w >= prev_w);
      CHECK(s >= prev_s);
      prev_w = w;
      prev_s = s;
    }
  }
}

TEST_CASE("treewidth and treedepth oracles") {
  CHECK(treewidth_oracle(Graph::path(6)) == 1);
  CHECK(treewidth_oracle(Graph::star(5)) == 1);
  CHECK(treewidth_oracle(Graph::cycle(5)) == 2);
  CHECK(treewidth_oracle(Graph::complete(5)) == 4);
  CHECK(treewidth_oracle(Graph(3, {})) == 0);
  CHECK(treedepth_oracle(Graph(1, {})) == 1);
  CHECK(treedepth_oracle(Graph::path(4)) == 3);
  CHECK(treedepth_oracle(Graph::path(7)) == 3);
  CHECK(treedepth_oracle(Graph::path(8)) == 4);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(treedepth_oracle(Graph::complete(n)) == n);
  CHECK(treedepth_oracle(Graph(4, {})) == 1);
}

TEST_CASE("exact search and oracles refuse graphs above the cap") {
  Graph big = Graph::path(50);
  expect_error([&] { exact_min(big, Radius(1), ReachKind::kWeak); }, ErrorCode::kCapExceeded, "degeneracy");
  expect_error([&] { treewidth_oracle(big); }, ErrorCode::kCapExceeded, "cap");
  expect_error([&] { treedepth_oracle(big); }, ErrorCode::kCapExceeded, "cap");
  ExactOptions opt;
  opt.cap = 3;
  expect_error([&] { exact_min(Graph::path(4), Radius(1), ReachKind::kWeak, opt); }, ErrorCode::kCapExceeded, "cap is 3");
  opt.cap = 100;
  expect_error([&] { exact_min(Graph::path(65), Radius(1), ReachKind::kWeak, opt); }, ErrorCode::kCapExceeded, "");
}

TEST_CASE("degeneracy ordering") {
  CHECK(scol_of_ordering(Graph::path(4), degeneracy_ordering(Graph::path(4)), Radius(1)).value == 2);
  CHECK(scol_of_ordering(Graph::complete(4), degeneracy_ordering(Graph::complete(4)), Radius(1)).value == 4);
  CHECK(scol_of_ordering(Graph::star(4), degeneracy_ordering(Graph::star(4)), Radius(1)).value == 2);
  // Smallest-last places the first removed vertex last.
  CHECK(degeneracy_ordering(Graph(3, {})) == make_ordering({2, 1, 0}));
}

TEST_CASE("degeneracy ordering attains the coloring number") {
  CounterRng rng(31);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = rng.between(1, 8);
    Graph g = random_graph(rng, n, rng.between(1, 3), 4);
    CHECK(scol_of_ordering(g, degeneracy_ordering(g), Radius(1)).value ==
          exact_min(g, Radius(1), ReachKind::kStrong).value);
  }
}
