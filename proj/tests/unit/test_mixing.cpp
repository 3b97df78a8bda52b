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

#include <gtest/gtest.h>

#include "support/generators.hpp"

namespace cardcut {
namespace {

using testing::inst_a;

IndexSet subset(std::initializer_list<int> one_based, int n = 5) {
  IndexSet s(static_cast<std::size_t>(n));
  for (int e : one_based) s.insert(e - 1);
  return s;
}

Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

TEST(TypeOne, Coefficients) {
  const MixingInequality one = type1_mixing({{frac(1, 2)}});
  EXPECT_EQ(one.coeffs, (std::vector<Rational>{frac(1, 2)}));
  EXPECT_EQ(one.rhs, frac(1, 2));
  const MixingInequality two = type1_mixing({{frac(1, 4), frac(3, 4)}});
  EXPECT_EQ(two.coeffs, (std::vector<Rational>{frac(1, 4), frac(1, 2)}));
  EXPECT_EQ(two.rhs, frac(3, 4));
  EXPECT_THROW(type1_mixing({{frac(1, 3), frac(1, 3)}}), DomainError);
  EXPECT_THROW(type1_mixing({{Rational(0)}}), DomainError);
  EXPECT_THROW(type1_mixing({{Rational(1)}}), DomainError);
  EXPECT_THROW(type1_mixing({{}}), DomainError);
}

// Brute force over all s and integer y in a small range: the mixing row holds
// wherever the base rows and s >= 0 hold.
TEST(TypeOne, ValidForBaseSystem) {
  const MixingBaseSystem sys{{frac(1, 5), frac(1, 2), frac(4, 5)}};
  const MixingInequality mix = type1_mixing(sys);
  for (int s_num = 0; s_num <= 20; ++s_num) {
    const Rational s = frac(s_num, 10);
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<int> y{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
      bool base = true;
      for (std::size_t i = 0; i < 3; ++i) base = base && s + y[i] >= sys.b[i];
      if (!base) continue;
      Rational lhs = s;
      for (std::size_t i = 0; i < 3; ++i) lhs += mix.coeffs[i] * y[i];
      EXPECT_GE(lhs, mix.rhs);
    }
  }
}

TEST(Upper, Examples) {
  EXPECT_EQ(format(mixing_upper(inst_a(), 0, subset({1, 2, 4, 5}))), "z1 + z2 + z4 + z5 + d1 <= 3");
  const Inequality full = mixing_upper(inst_a(), 1, subset({1, 2, 3, 4, 5}));
  EXPECT_EQ(format(full), "z1 + z2 + z3 + z4 + z5 + d2 <= 3");
  EXPECT_EQ(full.tag, "mix-upper(2,{1,2,3,4,5})");
  EXPECT_THROW(mixing_upper(inst_a(), 0, subset({3, 4, 5})), DomainError);
  EXPECT_THROW(mixing_upper(testing::inst_b(), 0, subset({1})), DomainError);
}

TEST(Lower, Examples) {
  EXPECT_EQ(format(mixing_lower(inst_a(), 1, subset({4, 5}))), "-z4 - z5 + d2 <= 0");
  EXPECT_THROW(mixing_lower(inst_a(), 1, subset({4})), DomainError);
  const Inequality e = mixing_lower(inst_a(), 0, subset({3, 4, 5}));
  EXPECT_EQ(format(e), "-z3 - z4 - z5 + d1 <= 0");
  EXPECT_EQ(e.delta_coeff(1), 0);
}

TEST(Mixing, ValidOnRandomNestedInstances) {
  testing::Rng rng(67);
  int upper = 0;
  int lower = 0;
  for (int t = 0; t < 25; ++t) {
    const Instance inst = testing::random_nested_instance(rng, 4, 7);
    const auto pts = enumerate_binary(inst);
    for (const IndexSet& s : testing::all_subsets(inst.n())) {
      for (int p = 0; p < inst.m(); ++p) {
        std::vector<Inequality> rows;
        if (upper_applies(inst, p, s)) rows.push_back(mixing_upper(inst, p, s)), ++upper;
        if (lower_applies(inst, p, s)) rows.push_back(mixing_lower(inst, p, s)), ++lower;
        for (const Inequality& e : rows) {
          for (const BinaryPoint& x : pts) ASSERT_TRUE(satisfies(e, x)) << e.tag;
        }
      }
    }
  }
  EXPECT_GT(upper, 100);
  EXPECT_GT(lower, 100);
}

// Base rows scaled by 1/M, M = n + 1; only the first index of each run of
// equal right-hand sides enters the mixing set.
void expect_mixing_derivation(const Instance& inst, int p, const IndexSet& s, bool upper) {
  const Rational big(inst.n() + 1);
  std::vector<int> starts;
  std::vector<Rational> b;
  for (int i = p; i < inst.m(); ++i) {
    const int level = upper ? inst.u() - (s - inst.set(i)).size()
                            : (s | inst.set(i)).size() - inst.n() + inst.l();
    const Rational bi = level / big;
    if (b.empty() || bi != b.back()) {
      starts.push_back(i);
      b.push_back(bi);
    }
  }
  const MixingInequality mix = type1_mixing({b});
  const Inequality e = upper ? mixing_upper(inst, p, s) : mixing_lower(inst, p, s);
  std::vector<Rational> expected(static_cast<std::size_t>(inst.m()));
  for (std::size_t k = 0; k < starts.size(); ++k) expected[static_cast<std::size_t>(starts[k])] = mix.coeffs[k] * big;
  for (int i = 0; i < inst.m(); ++i) EXPECT_EQ(e.delta_coeff(i), expected[static_cast<std::size_t>(i)]) << e.tag;
  for (int j = 0; j < inst.n(); ++j) EXPECT_EQ(e.z_coeff(j), s.contains(j) ? (upper ? 1 : -1) : 0);
  EXPECT_EQ(e.gamma, upper ? inst.u() : 0);
}

TEST(Mixing, MatchesTypeOneDerivation) {
  testing::Rng rng(71);
  for (int t = 0; t < 25; ++t) {
    const Instance inst = testing::random_nested_instance(rng, 4, 7);
    for (const IndexSet& s : testing::all_subsets(inst.n())) {
      for (int p = 0; p < inst.m(); ++p) {
        if (upper_applies(inst, p, s)) expect_mixing_derivation(inst, p, s, true);
        if (lower_applies(inst, p, s)) expect_mixing_derivation(inst, p, s, false);
      }
    }
  }
}

TEST(FacetUpper, Examples) {
  const Instance inst = inst_a();
  const FacetVerdict a = facet_check_upper(inst, 0, subset({1, 2, 4, 5}));
  EXPECT_TRUE(a.necessary.at("U1"));
  EXPECT_TRUE(a.necessary.at("U3"));
  EXPECT_EQ(a.sufficient, false);
  EXPECT_EQ(a.classification, FacetClass::kUndetermined);
  EXPECT_EQ(facet_rank(inst, mixing_upper(inst, 0, subset({1, 2, 4, 5}))), 5);

  const FacetVerdict b = facet_check_upper(inst, 0, subset({1, 2, 3, 5}));
  EXPECT_EQ(b.classification, FacetClass::kFacetBySufficiency);
  EXPECT_EQ(facet_rank(inst, mixing_upper(inst, 0, subset({1, 2, 3, 5}))), 6);

  EXPECT_EQ(facet_check_upper(inst, 0, subset({1, 4, 5})).classification, FacetClass::kViolatesNecessary);
  EXPECT_EQ(facet_rank(inst, mixing_upper(inst, 1, subset({1, 2, 3, 4, 5}))), 6);
}

TEST(FacetLower, Examples) {
  const Instance inst = inst_a();
  const FacetVerdict a = facet_check_lower(inst, 1, subset({4, 5}));
  EXPECT_TRUE(a.necessary.at("L1"));
  EXPECT_TRUE(a.necessary.at("L2"));
  EXPECT_TRUE(a.side_condition);
  EXPECT_EQ(a.classification, FacetClass::kFacetBySufficiency);
  EXPECT_EQ(facet_rank(inst, mixing_lower(inst, 1, subset({4, 5}))), 6);

  // {3,4,5} with the top set breaks the precondition itself
  EXPECT_THROW(facet_check_lower(inst, 1, subset({3, 4, 5})), DomainError);
  const FacetVerdict b = facet_check_lower(inst, 1, subset({1, 4, 5}));
  EXPECT_FALSE(b.necessary.at("L1"));
  EXPECT_EQ(b.classification, FacetClass::kViolatesNecessary);

  const FacetVerdict c = facet_check_lower(inst, 0, subset({3, 4, 5}));
  EXPECT_TRUE(c.necessary_ok());
  EXPECT_EQ(c.sufficient, false);
  EXPECT_EQ(c.classification, FacetClass::kUndetermined);
  EXPECT_EQ(facet_rank(inst, mixing_lower(inst, 0, subset({3, 4, 5}))), 5);
}

TEST(FacetBoundary, TopSetAtCapacity) {
  // |S_m| = n - l: the boundary remarks decide
  const Instance inst = Instance::from_lists(5, {{1, 2}, {1, 2, 3, 4}}, 1, 3);
  const int full = inst.n() + inst.m() - 1;
  const FacetVerdict up = facet_check_upper(inst, 1, subset({1, 2, 3, 4, 5}));
  EXPECT_EQ(up.classification, FacetClass::kBoundaryCase);
  EXPECT_EQ(up.boundary_facet, true);
  EXPECT_EQ(facet_rank(inst, mixing_upper(inst, 1, subset({1, 2, 3, 4, 5}))), full);
  const FacetVerdict lo = facet_check_lower(inst, 1, subset({5}));
  EXPECT_EQ(lo.classification, FacetClass::kBoundaryCase);
  EXPECT_EQ(lo.boundary_facet, true);
  EXPECT_EQ(facet_rank(inst, mixing_lower(inst, 1, subset({5}))), full);
  const json j = to_json(up);
  EXPECT_EQ(j["classification"], "boundary-case");
}

TEST(FacetSoundness, SufficiencyImpliesFullRank) {
  testing::Rng rng(73);
  int facets = 0;
  for (int t = 0; t < 15; ++t) {
    const Instance inst = testing::random_nested_instance(rng, 4, 6);
    const int full = inst.n() + inst.m() - 1;
    for (const IndexSet& s : testing::all_subsets(inst.n())) {
      for (int p = 0; p < inst.m(); ++p) {
        if (upper_applies(inst, p, s)) {
          const FacetVerdict v = facet_check_upper(inst, p, s);
          const int r = facet_rank(inst, mixing_upper(inst, p, s));
          if (v.classification == FacetClass::kFacetBySufficiency) {
            EXPECT_EQ(r, full);
            ++facets;
          }
          if (v.boundary_facet) {
            EXPECT_EQ(*v.boundary_facet, r == full);
          }
        }
        if (lower_applies(inst, p, s)) {
          const FacetVerdict v = facet_check_lower(inst, p, s);
          const int r = facet_rank(inst, mixing_lower(inst, p, s));
          if (v.classification == FacetClass::kFacetBySufficiency) {
            EXPECT_EQ(r, full);
            ++facets;
          }
          if (v.boundary_facet) {
            EXPECT_EQ(*v.boundary_facet, r == full);
          }
        }
      }
    }
  }
  EXPECT_GT(facets, 10);
}

TEST(Degenerate, UnitCap) {
  const Instance inst = Instance::from_lists(3, {{1, 2}}, 0, 1);
  ASSERT_TRUE(is_degenerate(inst));
  const DegenerateHull h = degenerate_hull(inst);
  EXPECT_EQ(h.kind, DegenerateKind::kUnitCap);
  Inequality eq;
  eq.add_delta(0, 1).add_z(0, 1).add_z(1, 1);
  eq.gamma = 1;
  eq.sense = Sense::kEq;
  Inequality cap;
  for (int j = 0; j < 3; ++j) cap.add_z(j, 1);
  cap.gamma = 1;
  bool has_eq = false;
  bool has_cap = false;
  for (const Inequality& e : h.inequalities) {
    has_eq = has_eq || e.same_constraint(eq);
    has_cap = has_cap || e.same_constraint(cap);
  }
  EXPECT_TRUE(has_eq);
  EXPECT_TRUE(has_cap);
}

TEST(Degenerate, NotDegenerate) {
  EXPECT_FALSE(is_degenerate(inst_a()));
  EXPECT_THROW(degenerate_hull(inst_a()), DomainError);
  EXPECT_THROW(degenerate_hull(testing::inst_b()), DomainError);
}

TEST(Degenerate, HighFloorReduction) {
  const Instance inst = Instance::from_lists(3, {{1}, {1, 2, 3}}, 1, 2);
  const DegenerateHull h = degenerate_hull(inst);
  EXPECT_EQ(h.kind, DegenerateKind::kReduction);
  EXPECT_EQ(h.fixed_zero, std::vector<int>{1});
  EXPECT_EQ(h.kept, std::vector<int>{0});
  const auto rest = reduced_instance(inst, h);
  ASSERT_TRUE(rest);
  EXPECT_EQ(rest->m(), 1);
  EXPECT_EQ(rest->set(0), subset({1}, 3));

  const Instance all = Instance::from_lists(3, {{1, 2, 3}}, 1, 2);
  const DegenerateHull g = degenerate_hull(all);
  EXPECT_EQ(g.fixed_zero, std::vector<int>{0});
  EXPECT_FALSE(reduced_instance(all, g));
  for (const BinaryPoint& p : enumerate_binary(all)) EXPECT_FALSE(p.delta.contains(0));
}

// For u <= 1 the returned system is the hull: LP and IP optima agree.
TEST(Degenerate, SmallCapHullIsExact) {
  testing::Rng rng(79);
  for (int t = 0; t < 20; ++t) {
    Instance inst = testing::random_nested_instance(rng, 3, 6);
    inst = inst.with_bounds(std::min(inst.l(), t % 2), t % 2);
    const DegenerateHull h = degenerate_hull(inst);
    LPModel model = zd_model(inst);
    for (const Inequality& e : h.inequalities) add_inequality(model, inst, e, false);
    for (int k = 0; k < 10; ++k) {
      const auto c = testing::random_integer_vector(rng, inst.n() + inst.m(), -4, 4);
      std::map<int, Rational> obj;
      for (int v = 0; v < inst.n() + inst.m(); ++v) obj[v] = c[static_cast<std::size_t>(v)];
      const LPResult res = solve_lp(model, obj, ObjectiveSense::kMaximize);
      ASSERT_EQ(res.status, LPStatus::kOptimal);
      EXPECT_EQ(res.value, ip_maximize(inst, c).value);
    }
  }
}

TEST(Degenerate, ReductionMatchesFeasibleSet) {
  testing::Rng rng(83);
  int checked = 0;
  for (int t = 0; t < 60 && checked < 15; ++t) {
    const Instance base = testing::random_nested_instance(rng, 3, 6);
    const int l = base.n() - base.set(base.m() - 1).size() + 1;
    if (l >= base.u()) continue;
    const Instance inst = base.with_bounds(l, base.u());
    const DegenerateHull h = degenerate_hull(inst);
    ASSERT_EQ(h.kind, DegenerateKind::kReduction);
    for (const BinaryPoint& p : enumerate_binary(inst)) {
      for (int i : h.fixed_zero) EXPECT_FALSE(p.delta.contains(i));
    }
    ++checked;
  }
  EXPECT_GT(checked, 5);
}

}  // namespace
}  // namespace cardcut
