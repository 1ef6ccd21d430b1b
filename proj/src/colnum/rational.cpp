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

#include "colnum/rational.hpp"

#include <algorithm>
#include <cctype>

#include "colnum/error.hpp"

namespace colnum {

namespace {

BigInt parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw_invalid("not a rational number: \"" + std::string(whole) + "\"");
  return BigInt(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt den = parse_digits(s.substr(slash + 1), text);
    if (den == 0) throw_invalid("zero denominator in \"" + std::string(text) + "\"");
    q = Rational(parse_digits(s.substr(0, slash), text), den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto int_part = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (int_part.empty() && frac.empty()) throw_invalid("not a rational number: \"" + std::string(text) + "\"");
    BigInt whole = int_part.empty() ? BigInt(0) : parse_digits(int_part, text);
    BigInt num = frac.empty() ? BigInt(0) : parse_digits(frac, text);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    q = Rational(whole * scale + num, scale);
  } else {
    q = Rational(parse_digits(s, text));
  }
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt ceil(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;  // truncates toward zero
  if (quot * den != num && num > 0) ++quot;
  return quot;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace colnum
