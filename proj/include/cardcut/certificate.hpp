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

// Optimality check for an LPResult that uses only the model and the
// reported primal and dual vectors, never the solver's tableau.

#pragma once

#include <string>

#include "cardcut/lp_model.hpp"
#include "cardcut/simplex.hpp"

namespace cardcut {

struct CertificateCheck {
  bool ok = false;
  std::string reason;
};

inline CertificateCheck verify_certificate(const LPModel& model, const LPResult& res) {
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  if (res.status != LPStatus::kOptimal) return fail("status is " + to_string(res.status));
  const auto nv = static_cast<std::size_t>(model.num_variables());
  const auto nr = static_cast<std::size_t>(model.num_rows());
  if (res.primal.size() != nv) return fail("primal length differs from the variable count");
  if (res.dual.size() != nr) return fail("dual length differs from the row count");
  for (std::size_t k = 0; k < nv; ++k) {
    const LPVariable& v = model.variables()[k];
    if (v.lower && res.primal[k] < *v.lower) return fail("variable " + v.name + " below its lower bound");
    if (v.upper && res.primal[k] > *v.upper) return fail("variable " + v.name + " above its upper bound");
  }
  const int sigma = model.objective_sense() == ObjectiveSense::kMaximize ? 1 : -1;
  std::vector<Rational> d(nv);
  Rational value = 0;
  for (const auto& [k, c] : model.objective()) {
    d[static_cast<std::size_t>(k)] = sigma * c;
    value += c * res.primal[static_cast<std::size_t>(k)];
  }
  if (value != res.value) return fail("reported value differs from the objective at the primal point");
  for (std::size_t r = 0; r < nr; ++r) {
    const LPRow& row = model.rows()[r];
    Rational lhs = 0;
    for (const auto& [k, c] : row.coeffs) lhs += c * res.primal[static_cast<std::size_t>(k)];
    const bool ok = row.sense == Sense::kLe ? lhs <= row.rhs : row.sense == Sense::kGe ? lhs >= row.rhs : lhs == row.rhs;
    if (!ok) return fail("row " + row.name + " violated");
    const Rational& y = res.dual[r];
    if (row.sense == Sense::kLe && y < 0) return fail("negative multiplier on <= row " + row.name);
    if (row.sense == Sense::kGe && y > 0) return fail("positive multiplier on >= row " + row.name);
    if (y != 0 && lhs != row.rhs) return fail("multiplier on slack row " + row.name);
    for (const auto& [k, c] : row.coeffs) d[static_cast<std::size_t>(k)] -= y * c;
  }
  for (std::size_t k = 0; k < nv; ++k) {
    const LPVariable& v = model.variables()[k];
    if (d[k] > 0 && !(v.upper && res.primal[k] == *v.upper)) return fail("reduced cost of " + v.name + " not at upper bound");
    if (d[k] < 0 && !(v.lower && res.primal[k] == *v.lower)) return fail("reduced cost of " + v.name + " not at lower bound");
  }
  return CertificateCheck{true, ""};
}

}  // namespace cardcut
