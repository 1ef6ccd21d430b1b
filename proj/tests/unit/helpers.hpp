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

#include <initializer_list>
#include <string>
#include <vector>

#include <doctest.h>

#include "colnum/error.hpp"
#include "colnum/graph.hpp"
#include "colnum/ordering.hpp"

namespace colnum::test {

inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> e(edges);
  return Graph(n, e);
}

inline Ordering make_ordering(std::initializer_list<Vertex> seq) { return Ordering(std::vector<Vertex>(seq)); }

inline std::vector<Vertex> ids(std::initializer_list<Vertex> v) { return std::vector<Vertex>(v); }

// Runs f, expecting Error with the given code and a message containing `needle`.
template <typename F>
void expect_error(F&& f, ErrorCode code, const std::string& needle) {
  try {
    f();
    FAIL("expected an error containing: " << needle);
  } catch (const Error& e) {
    CHECK(e.code() == code);
    CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos, std::string(e.what()));
  }
}

}  // namespace colnum::test
