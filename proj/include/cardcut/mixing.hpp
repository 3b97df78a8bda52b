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

// Mixing inequalities for nested families: the generic type I mixing row,
// the upper family over (p, S') valid for the cardinality cap, the lower
// family valid for the cardinality floor, their facet conditions, and the
// hulls of the degenerate cases.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cardcut/core.hpp"
#include "cardcut/family.hpp"

namespace cardcut {

/// Base rows s + y_i >= b_i with 0 < b_1 < ... < b_k < 1, y integer.
struct MixingBaseSystem {
  std::vector<Rational> b;

  int k() const { return static_cast<int>(b.size()); }

  void validate() const {
    if (b.empty()) throw DomainError("mixing: empty base system");
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] <= 0 || b[i] >= 1) throw DomainError("mixing: b_" + std::to_string(i + 1) + " outside (0, 1)");
      if (i > 0 && b[i] <= b[i - 1]) {
        throw DomainError("mixing: b must be strictly increasing (b_" + std::to_string(i) + " >= b_" +
                          std::to_string(i + 1) + ")");
      }
    }
  }
};

/// s + sum_i coeffs_i y_i >= rhs.
struct MixingInequality {
  Rational s_coeff = 1;
  std::vector<Rational> coeffs;
  Rational rhs;
};

inline MixingInequality type1_mixing(const MixingBaseSystem& sys) {
  sys.validate();
  MixingInequality out;
  for (int i = 0; i < sys.k(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.coeffs.push_back(i == 0 ? sys.b[0] : Rational(sys.b[k] - sys.b[k - 1]));
  }
  out.rhs = sys.b.back();
  return out;
}

namespace detail {

inline std::string pair_tag(const char* name, int p, const IndexSet& s) {
  return std::string(name) + "(" + std::to_string(p + 1) + "," + s.to_string() + ")";
}

inline void check_mixing_args(const Instance& inst, int p, const IndexSet& s_prime, std::string_view op) {
  require_nested(inst, op);
  if (p < 0 || p >= inst.m()) {
    throw DomainError(std::string(op) + ": p = " + std::to_string(p + 1) + " outside 1.." + std::to_string(inst.m()));
  }
  if (s_prime.universe() != static_cast<std::size_t>(inst.n())) {
    throw DomainError(std::string(op) + ": S' universe does not match n");
  }
}

inline IndexSet prefix_set(const Instance& inst, int p) {
  return p == 0 ? IndexSet(static_cast<std::size_t>(inst.n())) : inst.set(p - 1);
}

}  // namespace detail

inline bool upper_applies(const Instance& inst, int p, const IndexSet& s_prime) {
  return (s_prime - inst.set(p)).size() <= inst.u() - 1;
}

inline bool lower_applies(const Instance& inst, int p, const IndexSet& s_prime) {
  const int cap = inst.n() - inst.l();
  return (s_prime | detail::prefix_set(inst, p)).size() <= cap && (s_prime | inst.set(p)).size() > cap;
}

/// sum_{S'} z + (u - |S' \ S_p|) delta_p
///   + sum_{i > p} (|S' \ S_{i-1}| - |S' \ S_i|) delta_i <= u.
inline Inequality mixing_upper(const Instance& inst, int p, const IndexSet& s_prime) {
  detail::check_mixing_args(inst, p, s_prime, "mixing_upper");
  const int outside = (s_prime - inst.set(p)).size();
  if (outside > inst.u() - 1) {
    throw DomainError("mixing_upper: |S' \\ S_p| = " + std::to_string(outside) + " exceeds u - 1 = " +
                      std::to_string(inst.u() - 1) + " (u = " + std::to_string(inst.u()) + ")");
  }
  Inequality out;
  s_prime.for_each([&](int j) { out.add_z(j, 1); });
  out.add_delta(p, inst.u() - outside);
  for (int i = p + 1; i < inst.m(); ++i) {
    out.add_delta(i, (s_prime - inst.set(i - 1)).size() - (s_prime - inst.set(i)).size());
  }
  out.gamma = inst.u();
  out.tag = detail::pair_tag("mix-upper", p, s_prime);
  return out;
}

/// -sum_{S'} z + (|S' u S_p| - n + l) delta_p
///   + sum_{i > p} (|S' u S_i| - |S' u S_{i-1}|) delta_i <= 0.
inline Inequality mixing_lower(const Instance& inst, int p, const IndexSet& s_prime) {
  detail::check_mixing_args(inst, p, s_prime, "mixing_lower");
  const int cap = inst.n() - inst.l();
  const int before = (s_prime | detail::prefix_set(inst, p)).size();
  const int at = (s_prime | inst.set(p)).size();
  if (before > cap || at <= cap) {
    throw DomainError("mixing_lower: need |S' u S_{p-1}| <= n - l < |S' u S_p|, got " + std::to_string(before) +
                      ", " + std::to_string(cap) + ", " + std::to_string(at));
  }
  Inequality out;
  s_prime.for_each([&](int j) { out.add_z(j, -1); });
  out.add_delta(p, at - cap);
  for (int i = p + 1; i < inst.m(); ++i) {
    out.add_delta(i, (s_prime | inst.set(i)).size() - (s_prime | inst.set(i - 1)).size());
  }
  out.gamma = 0;
  out.tag = detail::pair_tag("mix-lower", p, s_prime);
  return out;
}

enum class FacetClass { kViolatesNecessary, kFacetBySufficiency, kBoundaryCase, kUndetermined };

inline std::string to_string(FacetClass c) {
  switch (c) {
    case FacetClass::kViolatesNecessary:
      return "violates-necessary";
    case FacetClass::kFacetBySufficiency:
      return "facet-by-sufficiency";
    case FacetClass::kBoundaryCase:
      return "boundary-case";
    case FacetClass::kUndetermined:
      return "undetermined";
  }
  return "?";
}

struct FacetVerdict {
  int p = 0;
  IndexSet s_prime;
  std::map<std::string, bool> necessary;  // U1..U3 or L1, L2
  std::optional<bool> sufficient;         // U4 or L3 with the side condition; unset when not evaluated
  bool side_condition = false;            // p < m or |S_m| < n - l
  std::optional<bool> boundary_facet;     // set only for the boundary case
  FacetClass classification = FacetClass::kUndetermined;

  bool necessary_ok() const {
    for (const auto& [k, v] : necessary) {
      if (!v) return false;
    }
    return true;
  }
};

namespace detail {

inline void classify(const Instance& inst, FacetVerdict& v, bool extra, bool boundary_iff) {
  const int last = inst.m() - 1;
  const int top = inst.set(last).size();
  const int cap = inst.n() - inst.l();
  v.side_condition = v.p < last || top < cap;
  if (!v.necessary_ok()) {
    v.classification = FacetClass::kViolatesNecessary;
    return;
  }
  if (v.p == last && top == cap) {
    v.classification = FacetClass::kBoundaryCase;
    v.boundary_facet = boundary_iff;
    return;
  }
  v.sufficient = extra && v.side_condition;
  v.classification = *v.sufficient ? FacetClass::kFacetBySufficiency : FacetClass::kUndetermined;
}

}  // namespace detail

inline FacetVerdict facet_check_upper(const Instance& inst, int p, const IndexSet& s_prime) {
  mixing_upper(inst, p, s_prime);
  FacetVerdict v{p, s_prime, {}, std::nullopt, false, std::nullopt, FacetClass::kUndetermined};
  const IndexSet& sp = inst.set(p);
  v.necessary["U1"] = sp.is_subset_of(s_prime);
  v.necessary["U2"] = p == 0 || (s_prime - inst.set(p - 1)).size() >= inst.u();
  v.necessary["U3"] = s_prime.size() >= inst.u() + 1;
  const bool u4 = p == inst.m() - 1 || s_prime.intersects(inst.set(p + 1) - sp);
  detail::classify(inst, v, u4, s_prime.size() == inst.n());
  return v;
}

inline FacetVerdict facet_check_lower(const Instance& inst, int p, const IndexSet& s_prime) {
  mixing_lower(inst, p, s_prime);
  FacetVerdict v{p, s_prime, {}, std::nullopt, false, std::nullopt, FacetClass::kUndetermined};
  const IndexSet& sp = inst.set(p);
  v.necessary["L1"] = !s_prime.intersects(sp);
  v.necessary["L2"] = s_prime.size() <= inst.n() - inst.l() - 1;
  const bool l3 = p == inst.m() - 1 || !(inst.set(p + 1) - sp).is_subset_of(s_prime);
  const bool single_outside = s_prime.size() == 1 && !s_prime.intersects(inst.set(inst.m() - 1));
  detail::classify(inst, v, l3, single_outside);
  return v;
}

inline json to_json(const FacetVerdict& v) {
  json conditions = json::object();
  for (const auto& [k, ok] : v.necessary) conditions[k] = ok;
  json out{{"p", v.p + 1},
           {"sprime", to_json(v.s_prime)},
           {"conditions", conditions},
           {"side_condition", v.side_condition},
           {"classification", to_string(v.classification)}};
  out["sufficient"] = v.sufficient ? json(*v.sufficient) : json(nullptr);
  out["boundary_facet"] = v.boundary_facet ? json(*v.boundary_facet) : json(nullptr);
  return out;
}

enum class DegenerateKind { kSinglePoint, kUnitCap, kReduction };

inline std::string to_string(DegenerateKind k) {
  switch (k) {
    case DegenerateKind::kSinglePoint:
      return "single-point";
    case DegenerateKind::kUnitCap:
      return "unit-cap";
    case DegenerateKind::kReduction:
      return "reduction";
  }
  return "?";
}

/// Hull of a degenerate regime, or the reduction to apply for a high floor.
struct DegenerateHull {
  DegenerateKind kind = DegenerateKind::kSinglePoint;
  std::vector<Inequality> inequalities;  // complete description for u <= 1
  std::vector<int> fixed_zero;           // reduction: delta_i fixed to 0
  std::vector<int> kept;                 // reduction: surviving set indices, original order
};

inline bool is_degenerate(const Instance& inst) {
  return inst.u() <= 1 || inst.l() > inst.n() - inst.set(inst.m() - 1).size();
}

inline DegenerateHull degenerate_hull(const Instance& inst) {
  require_nested(inst, "degenerate_hull");
  if (!is_degenerate(inst)) {
    throw DomainError("degenerate_hull: instance has u >= 2 and l <= n - |S_m|; use the mixing description");
  }
  DegenerateHull out;
  auto fix = [](Inequality e, Rational rhs, std::string tag) {
    e.gamma = std::move(rhs);
    e.sense = Sense::kEq;
    e.tag = std::move(tag);
    return e;
  };
  if (inst.u() == 0) {
    out.kind = DegenerateKind::kSinglePoint;
    for (int j = 0; j < inst.n(); ++j) {
      Inequality e;
      e.add_z(j, 1);
      out.inequalities.push_back(fix(e, 0, "fix-z(" + std::to_string(j + 1) + ")"));
    }
    for (int i = 0; i < inst.m(); ++i) {
      Inequality e;
      e.add_delta(i, 1);
      out.inequalities.push_back(fix(e, 1, "fix-delta(" + std::to_string(i + 1) + ")"));
    }
    return out;
  }
  if (inst.u() == 1) {
    out.kind = DegenerateKind::kUnitCap;
    for (int i = 0; i < inst.m(); ++i) {
      Inequality e;
      e.add_delta(i, 1);
      inst.set(i).for_each([&](int j) { e.add_z(j, 1); });
      out.inequalities.push_back(fix(e, 1, "unit-delta(" + std::to_string(i + 1) + ")"));
    }
    Inequality lo;
    Inequality hi;
    for (int j = 0; j < inst.n(); ++j) {
      lo.add_z(j, 1);
      hi.add_z(j, 1);
    }
    lo.gamma = inst.l();
    lo.sense = Sense::kGe;
    lo.tag = "card-lower";
    hi.gamma = 1;
    hi.tag = "card-upper";
    out.inequalities.push_back(std::move(lo));
    out.inequalities.push_back(std::move(hi));
    for (int j = 0; j < inst.n(); ++j) {
      Inequality nonneg;
      nonneg.add_z(j, -1);
      nonneg.tag = "z-nonneg(" + std::to_string(j + 1) + ")";
      out.inequalities.push_back(std::move(nonneg));
      Inequality upper;
      upper.add_z(j, 1);
      upper.gamma = 1;
      upper.tag = "z-upper(" + std::to_string(j + 1) + ")";
      out.inequalities.push_back(std::move(upper));
    }
    return out;
  }
  out.kind = DegenerateKind::kReduction;
  const int cap = inst.n() - inst.l();
  for (int i = 0; i < inst.m(); ++i) {
    if (inst.set(i).size() > cap) {
      out.fixed_zero.push_back(i);
      Inequality e;
      e.add_delta(i, 1);
      out.inequalities.push_back(fix(e, 0, "fix-delta(" + std::to_string(i + 1) + ")"));
    } else {
      out.kept.push_back(i);
    }
  }
  return out;
}

/// The instance left after a reduction; nullopt when every set was fixed.
inline std::optional<Instance> reduced_instance(const Instance& inst, const DegenerateHull& hull) {
  if (hull.kind != DegenerateKind::kReduction || hull.kept.empty()) return std::nullopt;
  std::vector<IndexSet> sets;
  for (int i : hull.kept) sets.push_back(inst.set(i));
  return Instance(inst.n(), std::move(sets), inst.l(), inst.u());
}

inline json to_json(const DegenerateHull& h) {
  json rows = json::array();
  for (const Inequality& e : h.inequalities) rows.push_back(to_json(e));
  json fixed = json::array();
  for (int i : h.fixed_zero) fixed.push_back(i + 1);
  json kept = json::array();
  for (int i : h.kept) kept.push_back(i + 1);
  return json{{"kind", to_string(h.kind)}, {"inequalities", rows}, {"fixed_zero", fixed}, {"kept", kept}};
}

}  // namespace cardcut
