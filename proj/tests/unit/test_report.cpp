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

#include "colnum/battery.hpp"
#include "colnum/report_json.hpp"
#include "helpers.hpp"

using namespace colnum;
using namespace colnum::test;

TEST_CASE("reach report json") {
  Graph g = Graph::path(4);
  auto j = to_json(scol_of_ordering(g, Ordering::identity(4), Radius(2)));
  CHECK(j["kind"] == "strong");
  CHECK(j["r"] == 2);
  CHECK(j["value"] == 2);
  CHECK(j["per_vertex"].size() == 4);
  CHECK(radius_json(Radius::infinity()) == "inf");
  CHECK(radius_json(Radius(3)) == 3);
}

TEST_CASE("exact result json") {
  auto res = exact_min(Graph::cycle(5), Radius(2), ReachKind::kStrong);
  auto j = to_json(res);
  CHECK(j["value"] == 3);
  CHECK(j["witness"].size() == 5);
  CHECK(j["explored"].get<std::uint64_t>() >= 1);
}

TEST_CASE("instance parsing") {
  auto inst = parse_instance_json(R"({"n":3,"layers":[{"edges":[[0,1],[1,2]],"r":1,"a":1,"sigma":[0,1,2]}]})");
  CHECK(inst.n == 3);
  REQUIRE(inst.layers.size() == 1);
  CHECK(inst.layers[0].graph.edge_count() == 2);
  CHECK(inst.layers[0].sigma.sequence() == ids({0, 1, 2}));

  auto named = parse_instance_json(
      R"({"n":4,"layers":[{"edges":[[0,1],[1,2],[2,3]],"r":1,"a":2,"sigma":"exact"},)"
      R"({"edges":[[0,1],[1,2],[2,3]],"r":1,"a":1,"sigma":"degeneracy"}]})");
  REQUIRE(named.layers.size() == 2);
  CHECK(scol_of_ordering(named.layers[0].graph, named.layers[0].sigma, Radius(2)).value == 2);
  CHECK(named.layers[1].sigma.size() == 4);
}

TEST_CASE("instance parsing errors") {
  auto bad = [](const char* text, const char* needle) {
    expect_error([&] { parse_instance_json(text); }, ErrorCode::kInvalidInput, needle);
  };
  bad("{", "instance: ");
  bad(R"({"n":3})", "instance: ");
  bad(R"({"n":3,"layers":[]})", "nonempty");
  bad(R"({"n":3,"layers":[{"edges":[[0]],"r":1,"a":1,"sigma":[0,1,2]}]})", "bad edge");
  bad(R"({"n":3,"layers":[{"edges":[[0,5]],"r":1,"a":1,"sigma":[0,1,2]}]})", "layer 0");
  bad(R"({"n":3,"layers":[{"edges":[],"r":0,"a":1,"sigma":[0,1,2]}]})", "positive");
  bad(R"({"n":3,"layers":[{"edges":[],"r":1,"a":1,"sigma":"best"}]})", "unknown sigma");
  bad(R"({"n":3,"layers":[{"edges":[],"r":1,"a":1,"sigma":[0,1]}]})", "all 3");
  bad(R"({"n":3,"layers":[{"edges":[],"r":1,"a":1,"sigma":[0,1,1]}]})", "layer 0: ordering repeats vertex 1");
}

TEST_CASE("uniform run json") {
  auto inst = parse_instance_json(R"({"n":3,"layers":[{"edges":[[0,1],[1,2]],"r":1,"a":1,"sigma":[0,1,2]}]})");
  auto j = to_json(run_instance(inst, {}));
  CHECK(j["mode"].is_string());
  CHECK(j["sigma_star"] == Json::array({0, 1, 2}));
  CHECK(j["rounds"] == 3);
  CHECK(j["ok"] == true);
  CHECK(j["layers"].size() == 1);
  CHECK(j["checks"].empty());
}

TEST_CASE("example json") {
  auto g = build_example21({4, 4, 1, 2});
  auto labels = labels_json(g);
  CHECK(labels.size() == 28);
  CHECK(labels["z_1^1"] == g.z(1, 1));
  auto facts = to_json(verify_facts(g));
  CHECK(facts["E1"] == true);
  auto claims = to_json(verify_claims(g, 5, 1), g.params);
  CHECK(claims["ok"] == true);
  CHECK(claims["claim3"]["samples"] == 5);
}

TEST_CASE("battery names") {
  const auto& names = suite_names();
  CHECK(names.front() == "oracle");
  CHECK(names.back() == "all");
  CHECK(names.size() == 9);
  expect_error([] { run_suite("nope", 7); }, ErrorCode::kInvalidInput, "unknown suite");
}

TEST_CASE("battery suite is deterministic") {
  auto a = suite_report("prop11", 7, run_suite("prop11", 7)).dump();
  auto b = suite_report("prop11", 7, run_suite("prop11", 7)).dump();
  CHECK(a == b);
  auto j = Json::parse(a);
  CHECK(j["pass"] == true);
  CHECK(j["criteria"][0]["id"] == 3);
}
