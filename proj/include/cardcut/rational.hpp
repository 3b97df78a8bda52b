// Copyright 2026 The cardcut Authors.
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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cardcut/errors.hpp"

namespace cardcut {

using Rational = mpq_class;
using Integer = mpz_class;

/// Renders as "p/q"; integers keep the "/1" suffix so every value has one shape.
inline std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

/// Accepts "p/q", "p", and finite decimals such as "-0.25".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&]() -> Rational { throw ParseError("not a rational number: '" + s + "'"); };
  if (s.empty()) return fail();
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t scale = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") return fail();
    Integer num;
    if (num.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0) return fail();
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    Rational out(num, den);
    out.canonicalize();
    return out;
  }
  Rational out;
  if (out.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) return fail();
  if (out.get_den() == 0) return fail();
  out.canonicalize();
  return out;
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// Least common multiple of all denominators (1 for an empty range).
template <typename Range>
Integer common_denominator(const Range& values) {
  Integer lcm = 1;
  for (const Rational& v : values) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  return lcm;
}

inline std::vector<Rational> to_rationals(const std::vector<long>& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace cardcut
