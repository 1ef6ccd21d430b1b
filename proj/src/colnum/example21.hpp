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

// Graphs on which no single ordering is near-optimal for two radii r < r'.
//
// Z is split into n parts Z_i of t vertices z_i^h. For every ordered pair
// (i, j), i != j, a hub x_{i,j} is joined to each z_i^h by a path P of length
// r and to each z_j^h by a path Q of length r' - r; all other path vertices
// (the set Y) are fresh. Ordering Z before X before Y keeps scol_r small;
// ordering X before Z before Y keeps scol_{r'} small; no ordering does both.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "colnum/graph.hpp"
#include "colnum/ordering.hpp"

namespace colnum {

struct Example21Params {
  unsigned t = 4;
  unsigned n = 4;
  unsigned r = 1;
  unsigned r_prime = 2;

  /// Requires 4 <= t <= n and 1 <= r < r_prime.
  void validate() const;
  /// n t + n (n - 1) (1 + t (r' - 2))
  std::size_t vertex_count() const;
};

enum class Block : std::uint8_t { kZ, kX, kY };

struct Example21Graph {
  Example21Params params;
  Graph graph;
  std::vector<std::string> labels;  // "z_i^h", "x_i,j", "p_i,j^h.s", "q_i,j^h.s"
  std::vector<Block> block;

  // 1-based indices, as in the construction
  Vertex z(unsigned i, unsigned h) const;
  Vertex x(unsigned i, unsigned j) const;
  std::vector<Vertex> z_part(unsigned i) const;
  /// X_i = {x_{i,j}, x_{j,i} : j != i}
  std::vector<Vertex> x_part(unsigned i) const;
};

Example21Graph build_example21(const Example21Params& params);

struct Example21Facts {
  bool e1 = false;  // all cross-part Z distances equal r'
  bool e2 = false;  // removing X separates Z; removing x_{i,j}, x_{j,i} pushes Z_i, Z_j beyond r'
  bool e3 = false;  // dist(x_{i,j}, x) > r' for x outside X_i ∪ X_j
  std::vector<std::string> failures;
  bool ok() const { return e1 && e2 && e3; }
};

Example21Facts verify_facts(const Example21Graph& g);

/// Block orderings Z < X < Y and X < Z < Y; construction order inside blocks.
std::pair<Ordering, Ordering> claim_orderings(const Example21Graph& g);

struct Example21Claims {
  std::size_t claim1_value = 0, claim1_bound = 0;  // scol_r(sigma_ZXY) <= 2t + 1
  std::size_t claim2_value = 0, claim2_bound = 0;  // scol_r'(sigma_XZY) <= 4n - 6
  bool claim1 = false, claim2 = false;
  // Claim 3: every ordering has scol_r >= .246 n or scol_r' >= .754 n t
  std::size_t samples = 0;
  std::size_t claim3_failures = 0;
  std::size_t claim3_min_scol_r = 0, claim3_min_scol_rp = 0;
  std::size_t claim3_max_scol_r = 0, claim3_max_scol_rp = 0;
  bool ok() const { return claim1 && claim2 && claim3_failures == 0; }
};

/// Thresholds compared exactly: 1000 * scol >= 246 n (resp. 754 n t).
bool claim3_holds(const Example21Params& p, std::size_t scol_r, std::size_t scol_rp);

Example21Claims verify_claims(const Example21Graph& g, std::size_t samples, std::uint64_t seed);

}  // namespace colnum
