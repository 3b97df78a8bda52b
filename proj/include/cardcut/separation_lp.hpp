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

// Lower-family separation by the totally unimodular LP over B subset of
// J \ S_p, solved exactly. Slower than the greedy; kept as a cross-check.

#pragma once

#include "cardcut/separation.hpp"
#include "cardcut/simplex.hpp"

namespace cardcut {

inline SeparationResult separate_lower_lp(const Instance& inst, const Point& pt) {
  require_nested(inst, "separate_lower_lp");
  require_box_point(inst, pt);
  const std::vector<int> level = detail::element_levels(inst);
  const int m = inst.m();
  const int cap = inst.n() - inst.l();
  SeparationResult best;
  best.family = "mix-lower";
  for (int p = 0; p < m; ++p) {
    const Rational& dp = pt.delta[static_cast<std::size_t>(p)];
    const int sp = inst.set(p).size();
    const int prev = p == 0 ? 0 : inst.set(p - 1).size();
    LPModel lp;
    std::vector<int> cols;
    std::map<int, Rational> obj;
    std::map<int, Rational> count;
    for (int j = 0; j < inst.n(); ++j) {
      const int lv = level[static_cast<std::size_t>(j)];
      if (lv <= p) continue;
      const int k = lp.add_variable("x" + std::to_string(j + 1), Rational(0), Rational(1));
      cols.push_back(j);
      const Rational sigma = lv < m ? Rational(dp - pt.delta[static_cast<std::size_t>(lv)] - pt.z[static_cast<std::size_t>(j)])
                                    : Rational(dp - pt.z[static_cast<std::size_t>(j)]);
      obj.emplace(k, sigma);
      count.emplace(k, 1);
    }
    if (cols.empty()) {
      if (sp <= cap) continue;
    }
    lp.add_row("hi", count, Sense::kLe, cap - prev);
    lp.add_row("lo", count, Sense::kGe, cap + 1 - sp);
    lp.set_objective(obj, ObjectiveSense::kMaximize);
    const LPResult r = solve_lp(lp);
    if (r.status != LPStatus::kOptimal) continue;
    IndexSet q(static_cast<std::size_t>(inst.n()));
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (r.primal[k] == 1) {
        q.insert(cols[k]);
      } else if (r.primal[k] != 0) {
        throw InternalError("separate_lower_lp: fractional vertex in a unimodular system");
      }
    }
    Rational total = (sp - cap) * dp + r.value;
    for (int i = p + 1; i < m; ++i) {
      total += (inst.set(i).size() - inst.set(i - 1).size()) * pt.delta[static_cast<std::size_t>(i)];
    }
    SeparationResult cand{false, std::nullopt, total, "mix-lower", p, q};
    if (detail::improves(cand, best)) {
      cand.inequality = mixing_lower(inst, p, q);
      best = std::move(cand);
    }
  }
  best.found = best.inequality && best.violation > 0;
  return best;
}

}  // namespace cardcut
