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

Point point(std::vector<Rational> z, std::vector<Rational> d) { return Point{std::move(z), std::move(d)}; }

void expect_consistent(const SeparationResult& r, const Point& p) {
  if (!r.inequality) return;
  EXPECT_EQ(evaluate(*r.inequality, p), -r.violation);
  EXPECT_EQ(r.found, r.violation > 0);
}

TEST(Upper, FeasiblePointNotCut) {
  EXPECT_FALSE(separate_upper(inst_a(), lift_point(inst_a(), subset({1, 4}))).found);
}

TEST(Upper, DominatedPoint) {
  const Point p = point(to_rationals({0, 0, 0, 1, 1}), to_rationals({1, 0}));
  const SeparationResult r = separate_upper(inst_a(), p);
  EXPECT_FALSE(r.found);
  EXPECT_EQ(r.violation, brute_separation_upper(inst_a(), p).violation);
  EXPECT_EQ(r.violation, 0);
}

TEST(Upper, FractionalPoint) {
  const Rational h = frac(1, 2);
  const Point p = point({h, h, 0, 1, 1}, {h, 0});
  const SeparationResult r = separate_upper(inst_a(), p);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.violation, h);
  EXPECT_EQ(*r.p, 0);
  EXPECT_EQ(*r.s_prime, subset({1, 2, 4, 5}));
  EXPECT_EQ(format(*r.inequality), "z1 + z2 + z4 + z5 + d1 <= 3");
  expect_consistent(r, p);
  const SeparationResult b = brute_separation_upper(inst_a(), p);
  EXPECT_EQ(b.violation, h);
  EXPECT_EQ(*b.s_prime, *r.s_prime);
}

TEST(Lower, FeasiblePointsNotCut) {
  for (const Point& p : enumerate_points(inst_a())) EXPECT_FALSE(separate_lower(inst_a(), p).found);
}

TEST(Lower, FractionalPoint) {
  const Rational q = frac(1, 4);
  const Point p = point({0, 0, 0, q, q}, to_rationals({1, 1}));
  const SeparationResult r = separate_lower(inst_a(), p);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.violation, frac(1, 2));
  EXPECT_EQ(*r.p, 0);
  EXPECT_EQ(*r.s_prime, subset({3, 4, 5}));
  expect_consistent(r, p);
  // the other maximizer
  EXPECT_EQ(-evaluate(mixing_lower(inst_a(), 1, subset({4, 5})), p), frac(1, 2));
  const SeparationResult b = brute_separation_lower(inst_a(), p);
  EXPECT_EQ(b.violation, r.violation);
  EXPECT_EQ(*b.p, *r.p);
  EXPECT_EQ(*b.s_prime, *r.s_prime);
  EXPECT_EQ(separate_lower_lp(inst_a(), p).violation, frac(1, 2));
}

TEST(Lower, IntegralPointNotCut) {
  const Point p = point(to_rationals({0, 0, 1, 1, 1}), to_rationals({1, 0}));
  const SeparationResult r = separate_lower(inst_a(), p);
  EXPECT_FALSE(r.found);
  EXPECT_EQ(r.violation, -2);
  EXPECT_EQ(brute_separation_lower(inst_a(), p).violation, -2);
}

TEST(All, RejectsPointsOutsideBox) {
  const Point p = point(to_rationals({-1, 0, 0, 0, 0}), to_rationals({0, 0}));
  EXPECT_THROW(separate_all(inst_a(), p), DomainError);
  EXPECT_THROW(separate_upper(inst_a(), p), DomainError);
  EXPECT_THROW(separate_lower(inst_a(), point(to_rationals({0, 0, 0, 0, 0}), to_rationals({0, 2}))), DomainError);
  EXPECT_THROW(separate_all(testing::inst_b(), lift_point(testing::inst_b(), subset({1}))), DomainError);
}

TEST(All, LinearizationRowWins) {
  const Rational h = frac(1, 2);
  const Point p = point(to_rationals({1, 0, 1, 0, 0}), {h, 0});
  const SeparationResult r = separate_all(inst_a(), p);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.violation, h);
  EXPECT_EQ(r.inequality->tag, "product(1,1)");
  EXPECT_LE(separate_upper(inst_a(), p).violation, h);
  EXPECT_LE(separate_lower(inst_a(), p).violation, h);
}

TEST(All, LowerPointTiesWithCardinality) {
  const Rational q = frac(1, 4);
  const Point p = point({0, 0, 0, q, q}, to_rationals({1, 1}));
  const SeparationResult r = separate_all(inst_a(), p);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.violation, frac(1, 2));
  EXPECT_EQ(r.inequality->tag, "card-lower");
  expect_consistent(r, p);
}

TEST(Greedy, MatchesBruteForce) {
  testing::Rng rng(89);
  int cuts = 0;
  for (int t = 0; t < 12; ++t) {
    const Instance inst = testing::random_nested_instance(rng, 4, 8);
    for (int k = 0; k < 40; ++k) {
      const Point p = testing::random_box_point(rng, inst);
      const SeparationResult up = separate_upper(inst, p);
      const SeparationResult bu = brute_separation_upper(inst, p);
      EXPECT_EQ(up.violation, bu.violation);
      EXPECT_EQ(up.p, bu.p);
      EXPECT_EQ(up.s_prime, bu.s_prime);
      expect_consistent(up, p);
      const SeparationResult lo = separate_lower(inst, p);
      const SeparationResult bl = brute_separation_lower(inst, p);
      EXPECT_EQ(lo.violation, bl.violation);
      EXPECT_EQ(lo.p, bl.p);
      EXPECT_EQ(lo.s_prime, bl.s_prime);
      expect_consistent(lo, p);
      EXPECT_EQ(separate_lower_lp(inst, p).violation, lo.violation);
      cuts += up.found + lo.found;
    }
  }
  EXPECT_GT(cuts, 50);
}

TEST(Greedy, HullPointsNeverCut) {
  testing::Rng rng(97);
  for (int t = 0; t < 12; ++t) {
    const Instance inst = testing::random_nested_instance(rng, 4, 8);
    const auto pts = enumerate_points(inst);
    for (int k = 0; k < 30; ++k) {
      const Point p = testing::random_hull_point(rng, inst, pts);
      EXPECT_FALSE(separate_all(inst, p).found);
    }
  }
}

TEST(Json, ResultFields) {
  const Rational h = frac(1, 2);
  const json j = to_json(separate_upper(inst_a(), point({h, h, 0, 1, 1}, {h, 0})));
  EXPECT_EQ(j["found"], true);
  EXPECT_EQ(j["violation"], "1/2");
  EXPECT_EQ(j["p"], 1);
  EXPECT_EQ(j["sprime"], json::array({1, 2, 4, 5}));
}

}  // namespace
}  // namespace cardcut
