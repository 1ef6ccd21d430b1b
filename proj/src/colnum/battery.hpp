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

// Verification battery. Each suite checks one family of bounds against the
// oracles and reports a deterministic JSON summary (no clocks, no addresses).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "colnum/report_json.hpp"

namespace colnum {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first_failure;
  Json stats = Json::object();
};

Json to_json(const CriterionResult& c);

/// Suite names: oracle, sandwich, prop11, thm41, thm13, thm15, cor43,
/// example21, all.
const std::vector<std::string>& suite_names();

/// Runs a suite. Throws Error(kInvalidInput) for an unknown name.
std::vector<CriterionResult> run_suite(std::string_view name, std::uint64_t seed);

/// { "suite", "seed", "criteria": [...], "pass" }
Json suite_report(std::string_view name, std::uint64_t seed, const std::vector<CriterionResult>& results);

}  // namespace colnum
