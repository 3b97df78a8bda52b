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

// Linear systems whose binary solutions are X^{l,u}: the standard
// linearization, and for nested families the reduced system with 2-link rows.

#pragma once

#include <string>
#include <vector>

#include "cardcut/core.hpp"
#include "cardcut/family.hpp"

namespace cardcut {

namespace detail {

inline std::string idx(int k) { return std::to_string(k + 1); }

inline void push_cardinality(const Instance& inst, std::vector<Inequality>& out) {
  Inequality lo;
  Inequality hi;
  for (int j = 0; j < inst.n(); ++j) {
    lo.add_z(j, 1);
    hi.add_z(j, 1);
  }
  lo.gamma = inst.l();
  lo.sense = Sense::kGe;
  lo.tag = "card-lower";
  hi.gamma = inst.u();
  hi.tag = "card-upper";
  out.push_back(std::move(lo));
  out.push_back(std::move(hi));
}

// z_j + delta_i <= 1 for j in S_i, ordered by (i, j).
inline void push_product_rows(const Instance& inst, std::vector<Inequality>& out) {
  for (int i = 0; i < inst.m(); ++i) {
    inst.set(i).for_each([&](int j) {
      Inequality e;
      e.add_z(j, 1).add_delta(i, 1);
      e.gamma = 1;
      e.tag = "product(" + idx(i) + "," + idx(j) + ")";
      out.push_back(std::move(e));
    });
  }
}

inline Inequality z_bound(int j, bool upper) {
  Inequality e;
  e.add_z(j, upper ? 1 : -1);
  e.gamma = upper ? 1 : 0;
  e.tag = (upper ? "z-upper(" : "z-nonneg(") + idx(j) + ")";
  return e;
}

}  // namespace detail

inline std::vector<Inequality> standard_linearization(const Instance& inst) {
  std::vector<Inequality> out;
  detail::push_cardinality(inst, out);
  detail::push_product_rows(inst, out);
  for (int i = 0; i < inst.m(); ++i) {
    Inequality e;
    e.add_delta(i, 1);
    inst.set(i).for_each([&](int j) { e.add_z(j, 1); });
    e.gamma = 1;
    e.sense = Sense::kGe;
    e.tag = "cover(" + detail::idx(i) + ")";
    out.push_back(std::move(e));
  }
  for (int i = 0; i < inst.m(); ++i) {
    Inequality e;
    e.add_delta(i, 1);
    e.sense = Sense::kGe;
    e.tag = "delta-nonneg(" + detail::idx(i) + ")";
    out.push_back(std::move(e));
  }
  for (int j = 0; j < inst.n(); ++j) {
    Inequality e;
    e.add_z(j, 1);
    e.sense = Sense::kGe;
    e.tag = "z-nonneg(" + detail::idx(j) + ")";
    out.push_back(std::move(e));
  }
  for (int j = 0; j < inst.n(); ++j) out.push_back(detail::z_bound(j, true));
  return out;
}

inline std::vector<Inequality> two_link(const Instance& inst) {
  require_nested(inst, "two_link");
  std::vector<Inequality> out;
  for (int i = 0; i + 1 < inst.m(); ++i) {
    Inequality order;
    order.add_delta(i + 1, 1).add_delta(i, -1);
    order.tag = "2-link-order(" + detail::idx(i) + ")";
    out.push_back(std::move(order));
    Inequality step;
    step.add_delta(i, 1).add_delta(i + 1, -1);
    (inst.set(i + 1) - inst.set(i)).for_each([&](int j) { step.add_z(j, -1); });
    step.tag = "2-link-step(" + detail::idx(i) + ")";
    out.push_back(std::move(step));
  }
  return out;
}

inline std::vector<Inequality> reduced_formulation(const Instance& inst) {
  require_nested(inst, "reduced_formulation");
  std::vector<Inequality> out;
  detail::push_cardinality(inst, out);
  detail::push_product_rows(inst, out);
  Inequality cover;
  cover.add_delta(0, -1);
  inst.set(0).for_each([&](int j) { cover.add_z(j, -1); });
  cover.gamma = -1;
  cover.tag = "cover(1)";
  out.push_back(std::move(cover));
  Inequality last;
  last.add_delta(inst.m() - 1, -1);
  last.tag = "delta-nonneg(" + detail::idx(inst.m() - 1) + ")";
  out.push_back(std::move(last));
  for (int j = 0; j < inst.n(); ++j) out.push_back(detail::z_bound(j, false));
  const IndexSet& top = inst.set(inst.m() - 1);
  for (int j = 0; j < inst.n(); ++j) {
    if (!top.contains(j)) out.push_back(detail::z_bound(j, true));
  }
  for (Inequality& e : two_link(inst)) out.push_back(std::move(e));
  return out;
}

}  // namespace cardcut
