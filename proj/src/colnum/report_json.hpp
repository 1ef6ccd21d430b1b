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

#include <string_view>

#include <json.hpp>

#include "colnum/example21.hpp"
#include "colnum/exact.hpp"
#include "colnum/reach.hpp"
#include "colnum/uniform.hpp"

namespace colnum {

using Json = nlohmann::ordered_json;

Json radius_json(Radius r);  // integer, or "inf"

/// { "kind", "r", "value", "per_vertex" }
Json to_json(const ReachReport& report);
/// { "kind", "r", "value", "witness", "explored" }
Json to_json(const ExactResult& result);
/// { "sigma_star", "layers": [{ "r", "a", "w", "lhs", "rhs_num", "rhs_den", "ok" }],
///   "claim5_max", "audit"? } plus mode-specific fields.
Json to_json(const UniformRun& run);

/// label -> vertex id
Json labels_json(const Example21Graph& g);
Json to_json(const Example21Facts& facts);
Json to_json(const Example21Claims& claims, const Example21Params& params);

/// Parses { "n", "layers": [{ "edges", "r", "a", "sigma" }] } where sigma is
/// a permutation, "exact" or "degeneracy". Throws Error(kInvalidInput).
UniformInstance parse_instance_json(std::string_view text, std::size_t exact_cap = kDefaultExactCap);

}  // namespace colnum
