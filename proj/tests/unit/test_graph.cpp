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
#include <numeric>

#include "colnum/corpus.hpp"
#include "colnum/graph.hpp"
#include "colnum/ordering.hpp"
#include "colnum/rng.hpp"
#include "helpers.hpp"

using namespace colnum;
using namespace colnum::test;

TEST_CASE("parse_graph reads the edge-list format") {
  Graph g = parse_graph("3 2\n0 1\n1 2\n");
  CHECK(g == Graph::path(3));
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));

  Graph single = parse_graph("1 0\n");
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  Graph commented = parse_graph("# a triangle\n3 3\n\n0 1\n# middle\n1 2\n2 0\n");
  CHECK(commented == Graph::complete(3));
}

TEST_CASE("parse_graph rejects malformed input with line numbers") {
  expect_error([] { parse_graph("3 2\n0 1\n0 1\n"); }, ErrorCode::kInvalidInput, "line 3");
  expect_error([] { parse_graph("3 2\n0 1\n0 1\n"); }, ErrorCode::kInvalidInput, "duplicate");
  expect_error([] { parse_graph("3 2\n0 1\n1 0\n"); }, ErrorCode::kInvalidInput, "line 3");
  expect_error([] { parse_graph("3 1\n1 1\n"); }, ErrorCode::kInvalidInput, "line 2");
  expect_error([] { parse_graph("3 1\n1 1\n"); }, ErrorCode::kInvalidInput, "self-loop");
  expect_error([] { parse_graph("3 1\n0 3\n"); }, ErrorCode::kInvalidInput, "line 2");
  expect_error([] { parse_graph("x y\n"); }, ErrorCode::kInvalidInput, "line 1");
  expect_error([] { parse_graph(""); }, ErrorCode::kInvalidInput, "header");
  expect_error([] { parse_graph("3 2\n0 1\n"); }, ErrorCode::kInvalidInput, "expected 2");
  expect_error([] { parse_graph("3 1\n0 1 2\n"); }, ErrorCode::kInvalidInput, "line 2");
  expect_error([] { parse_graph("3 1\n0 -1\n"); }, ErrorCode::kInvalidInput, "line 2");
}

TEST_CASE("graph construction validates edges") {
  expect_error([] { make_graph(2, {{0, 0}}); }, ErrorCode::kInvalidInput, "self-loop");
  expect_error([] { make_graph(2, {{0, 1}, {1, 0}}); }, ErrorCode::kInvalidInput, "duplicate");
  expect_error([] { make_graph(2, {{0, 2}}); }, ErrorCode::kInvalidInput, "");
}

TEST_CASE("graph factories") {
  CHECK(Graph::complete(4).edge_count() == 6);
  CHECK(Graph::cycle(5).edge_count() == 5);
  CHECK(Graph::path(4).edge_count() == 3);
  Graph s = Graph::star(4);
  CHECK(s.vertex_count() == 5);
  CHECK(s.degree(0) == 4);
  for (Vertex v = 1; v <= 4; ++v) CHECK(s.degree(v) == 1);
  Graph c = Graph::cycle(5).without_edge(4, 0);
  CHECK(c == Graph::path(5));
}

TEST_CASE("serialization round-trips on random graphs") {
  CounterRng rng(11);
  for (int i = 0; i < 50; ++i) {
    std::size_t n = rng.between(1, 15);
    Graph g = random_graph(rng, n, 1, 3);
    Graph back = parse_graph(serialize_graph(g));
    CHECK(back == g);
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("parse_ordering") {
  CHECK(parse_ordering("0 1 2", 3) == Ordering::identity(3));
  Ordering o = parse_ordering("2 0 1", 3);
  CHECK(o.before(2, 0));
  CHECK(o.before(0, 1));
  CHECK(o.rank(2) == 0);
  CHECK(parse_ordering("1\n0\n", 2) == make_ordering({1, 0}));
  expect_error([] { parse_ordering("0 0 1", 3); }, ErrorCode::kInvalidInput, "repeats vertex 0");
  expect_error([] { parse_ordering("0 1", 3); }, ErrorCode::kInvalidInput, "expected 3");
  expect_error([] { parse_ordering("0 1 3", 3); }, ErrorCode::kInvalidInput, "out of range");
  expect_error([] { parse_ordering("0 a 1", 3); }, ErrorCode::kInvalidInput, "not a vertex id");
  expect_error([] { Ordering(std::vector<Vertex>{0, 2}); }, ErrorCode::kInvalidInput, "out of range");
}

TEST_CASE("ordering ranks invert the sequence") {
  CounterRng rng(3);
  for (int i = 0; i < 20; ++i) {
    Ordering o = random_ordering(rng, 12);
    for (std::size_t r = 0; r < o.size(); ++r) CHECK(o.rank(o.at(r)) == r);
    CHECK(parse_ordering(serialize_ordering(o), 12) == o);
  }
  Ordering o = make_ordering({3, 1, 0, 2});
  CHECK(o.min_of(ids({0, 2, 1})) == 1);
}

TEST_CASE("induced_ordering") {
  Ordering sigma = make_ordering({2, 0, 1});
  auto a = induced_ordering(sigma, ids({0, 1}));
  CHECK(a.original_sequence() == ids({0, 1}));
  auto b = induced_ordering(sigma, ids({2}));
  CHECK(b.original_sequence() == ids({2}));
  auto c = induced_ordering(make_ordering({3, 1, 0, 2}), ids({0, 2, 3}));
  CHECK(c.original_sequence() == ids({3, 0, 2}));
  CHECK(c.to_original == ids({0, 2, 3}));
  CHECK(c.order == make_ordering({2, 0, 1}));

  expect_error([&] { induced_ordering(sigma, {}); }, ErrorCode::kInvalidInput, "empty");
  expect_error([&] { induced_ordering(sigma, ids({0, 5})); }, ErrorCode::kInvalidInput, "unknown");
}

TEST_CASE("induced_ordering on the full set is the ordering itself") {
  CounterRng rng(5);
  for (int i = 0; i < 10; ++i) {
    Ordering o = random_ordering(rng, 9);
    std::vector<Vertex> all(9);
    std::iota(all.begin(), all.end(), Vertex{0});
    auto ind = induced_ordering(o, all);
    CHECK(ind.original_sequence() == o.sequence());
    CHECK(ind.order == o);
  }
}

TEST_CASE("distance") {
  Graph p = Graph::path(3);
  CHECK(distance(p, 0, 2) == 2);
  CHECK(distance(p, 1, 1) == 0);
  Graph two(2, {});
  CHECK_FALSE(distance(two, 0, 1).has_value());
  expect_error([&] { distance(p, 0, 3); }, ErrorCode::kInvalidInput, "invalid vertex");
}

TEST_CASE("distance is symmetric and satisfies the triangle inequality") {
  CounterRng rng(9);
  for (int i = 0; i < 30; ++i) {
    std::size_t n = rng.between(2, 10);
    Graph g = random_graph(rng, n, 1, 3);
    std::vector<std::vector<std::size_t>> d;
    for (Vertex v = 0; v < n; ++v) d.push_back(bfs_distances(g, v));
    for (Vertex x = 0; x < n; ++x) {
      CHECK(d[x][x] == 0);
      for (Vertex y = 0; y < n; ++y) {
        CHECK(d[x][y] == d[y][x]);
        for (Vertex z = 0; z < n; ++z) {
          if (d[x][y] == kUnreachable || d[y][z] == kUnreachable) continue;
          CHECK(d[x][z] <= d[x][y] + d[y][z]);
        }
      }
    }
  }
}

TEST_CASE("blocked multi-source BFS") {
  Graph c = Graph::cycle(6);
  std::vector<bool> blocked(6, false);
  blocked[3] = true;
  std::vector<Vertex> src{0};
  auto d = bfs_distances(c, src, blocked);
  CHECK(d[2] == 2);
  CHECK(d[4] == 2);
  CHECK(d[3] == kUnreachable);
}

TEST_CASE("radius") {
  CHECK(Radius::infinity().is_infinite());
  CHECK(Radius::infinity().bound(7) == 7);
  CHECK(Radius(3).bound(7) == 3);
  CHECK(Radius::infinity().to_string() == "inf");
  CHECK(Radius(2).to_string() == "2");
}
