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

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace colnum {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p/q", decimals such as "0.25" and integers. Decimals are read
/// exactly (0.1 is 1/10, not the nearest double).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);  // "p/q", or "p" when q == 1

BigInt ceil(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace colnum
