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

// Brute-force ground truth by enumerating X^{l,u}: validity, separation
// maxima over every (p, S'), dimension, tight-point rank, IP optima, fiber
// maxima, and the randomized completeness check of the cutting-plane loop.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cardcut/coeffs.hpp"
#include "cardcut/core.hpp"
#include "cardcut/cutting_plane.hpp"
#include "cardcut/family.hpp"
#include "cardcut/linalg.hpp"
#include "cardcut/mixing.hpp"
#include "cardcut/separation.hpp"

namespace cardcut {

inline constexpr int kSeparationGuard = 10;

struct ValidityReport {
  bool valid = true;
  std::optional<Point> witness;
};

inline ValidityReport brute_validity(const Instance& inst, const Inequality& ineq, int guard = enumeration_guard()) {
  for (const BinaryPoint& p : enumerate_binary(inst, guard)) {
    if (!satisfies(ineq, p)) return {false, p.to_point()};
  }
  return {};
}

namespace detail {

inline std::vector<int> point_vector(const BinaryPoint& p, int n, int m) {
  std::vector<int> v(static_cast<std::size_t>(n + m), 0);
  p.z.for_each([&](int j) { v[static_cast<std::size_t>(j)] = 1; });
  p.delta.for_each([&](int i) { v[static_cast<std::size_t>(n + i)] = 1; });
  return v;
}

// Point scaled to integers by the common denominator of its entries.
struct ScaledPoint {
  Integer den;
  std::vector<Integer> z;
  std::vector<Integer> delta;
};

inline ScaledPoint scale_point(const Point& pt) {
  std::vector<Rational> all = pt.z;
  all.insert(all.end(), pt.delta.begin(), pt.delta.end());
  ScaledPoint s{common_denominator(all), {}, {}};
  for (const Rational& v : pt.z) s.z.push_back(v.get_num() * (s.den / v.get_den()));
  for (const Rational& v : pt.delta) s.delta.push_back(v.get_num() * (s.den / v.get_den()));
  return s;
}

template <typename F>
SeparationResult brute_separation(const Instance& inst, const Point& pt, const char* family, F&& candidate) {
  require_nested(inst, family);
  require_box_point(inst, pt);
  require_guard(inst.n(), kSeparationGuard, "brute separation");
  const ScaledPoint s = scale_point(pt);
  SeparationResult best;
  best.family = family;
  std::optional<Integer> best_scaled;
  std::uint64_t best_mask = 0;
  const std::uint64_t limit = std::uint64_t{1} << inst.n();
  const auto universe = static_cast<std::size_t>(inst.n());
  Integer v;
  for (int p = 0; p < inst.m(); ++p) {
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      if (!candidate(p, mask, s, v)) continue;
      if (!best_scaled || v > *best_scaled) {
        best_scaled = v;
        best.p = p;
        best_mask = mask;
      }
    }
  }
  if (!best_scaled) return best;
  best.violation = Rational(*best_scaled, s.den);
  best.violation.canonicalize();
  best.s_prime = IndexSet::from_mask(universe, best_mask);
  best.found = best.violation > 0;
  return best;
}

inline std::uint64_t low_mask(const IndexSet& s) { return s.mask(); }

}  // namespace detail

/// Exhaustive maximum violation of the upper mixing family over all
/// admissible (p, S').
inline SeparationResult brute_separation_upper(const Instance& inst, const Point& pt) {
  std::vector<std::uint64_t> sets;
  for (const IndexSet& s : inst.family()) sets.push_back(detail::low_mask(s));
  const int u = inst.u();
  const int m = inst.m();
  auto r = detail::brute_separation(inst, pt, "mix-upper",
                                    [&](int p, std::uint64_t mask, const detail::ScaledPoint& s, Integer& v) {
    const int outside = std::popcount(mask & ~sets[static_cast<std::size_t>(p)]);
    if (outside > u - 1) return false;
    v = 0;
    for (int j = 0; j < inst.n(); ++j) {
      if ((mask >> j) & 1U) v += s.z[static_cast<std::size_t>(j)];
    }
    v += (u - outside) * s.delta[static_cast<std::size_t>(p)];
    for (int i = p + 1; i < m; ++i) {
      const int c = std::popcount(mask & ~sets[static_cast<std::size_t>(i - 1)]) -
                    std::popcount(mask & ~sets[static_cast<std::size_t>(i)]);
      if (c != 0) v += c * s.delta[static_cast<std::size_t>(i)];
    }
    v -= u * s.den;
    return true;
  });
  if (r.p) r.inequality = mixing_upper(inst, *r.p, *r.s_prime);
  return r;
}

inline SeparationResult brute_separation_lower(const Instance& inst, const Point& pt) {
  std::vector<std::uint64_t> sets;
  for (const IndexSet& s : inst.family()) sets.push_back(detail::low_mask(s));
  const int cap = inst.n() - inst.l();
  const int m = inst.m();
  auto r = detail::brute_separation(inst, pt, "mix-lower",
                                    [&](int p, std::uint64_t mask, const detail::ScaledPoint& s, Integer& v) {
    const std::uint64_t prev = p == 0 ? 0 : sets[static_cast<std::size_t>(p - 1)];
    const int at = std::popcount(mask | sets[static_cast<std::size_t>(p)]);
    if (std::popcount(mask | prev) > cap || at <= cap) return false;
    v = (at - cap) * s.delta[static_cast<std::size_t>(p)];
    for (int i = p + 1; i < m; ++i) {
      const int c = std::popcount(mask | sets[static_cast<std::size_t>(i)]) -
                    std::popcount(mask | sets[static_cast<std::size_t>(i - 1)]);
      if (c != 0) v += c * s.delta[static_cast<std::size_t>(i)];
    }
    for (int j = 0; j < inst.n(); ++j) {
      if ((mask >> j) & 1U) v -= s.z[static_cast<std::size_t>(j)];
    }
    return true;
  });
  if (r.p) r.inequality = mixing_lower(inst, *r.p, *r.s_prime);
  return r;
}

/// Dimension of conv(X^{l,u}): affine rank of the enumerated points.
inline int dimension(const Instance& inst, int guard = enumeration_guard()) {
  std::vector<std::vector<int>> pts;
  for (const BinaryPoint& p : enumerate_binary(inst, guard)) pts.push_back(detail::point_vector(p, inst.n(), inst.m()));
  return linalg::affine_rank(pts);
}

inline std::vector<BinaryPoint> tight_points(const Instance& inst, const Inequality& ineq, int guard = enumeration_guard()) {
  std::vector<BinaryPoint> out;
  for (const BinaryPoint& p : enumerate_binary(inst, guard)) {
    const Rational s = evaluate(ineq, p);
    if (s < 0 || (ineq.sense == Sense::kEq && s != 0)) {
      throw DomainError("facet_rank: inequality is not valid (violated at a feasible point)");
    }
    if (s == 0) out.push_back(p);
  }
  return out;
}

/// Affine rank of the feasible points on the hyperplane of a valid
/// inequality; it defines a facet iff this is dimension() - 1.
inline int facet_rank(const Instance& inst, const Inequality& ineq, int guard = enumeration_guard()) {
  std::vector<std::vector<int>> pts;
  for (const BinaryPoint& p : tight_points(inst, ineq, guard)) pts.push_back(detail::point_vector(p, inst.n(), inst.m()));
  return linalg::affine_rank(pts);
}

/// Two valid inequalities with the same set of tight feasible points.
inline bool same_face(const Instance& inst, const Inequality& a, const Inequality& b, int guard = enumeration_guard()) {
  const auto ta = tight_points(inst, a, guard);
  const auto tb = tight_points(inst, b, guard);
  if (ta.size() != tb.size()) return false;
  for (std::size_t k = 0; k < ta.size(); ++k) {
    if (!(ta[k].z == tb[k].z)) return false;
  }
  return true;
}

struct IPOptimum {
  Rational value;
  Point argmax;
};

/// Exact max over X^{l,u}; the first maximizer in enumeration order wins.
inline IPOptimum ip_maximize(const Instance& inst, const std::vector<Rational>& objective, int guard = enumeration_guard()) {
  if (objective.size() != static_cast<std::size_t>(inst.n() + inst.m())) {
    throw ParseError("objective: expected " + std::to_string(inst.n() + inst.m()) + " entries (z then delta)");
  }
  const Integer den = common_denominator(objective);
  std::vector<long> w;
  bool small = true;
  for (const Rational& c : objective) {
    const Integer k = c.get_num() * (den / c.get_den());
    if (!k.fits_slong_p() || abs(k) > (Integer(1) << 40)) small = false;
    w.push_back(small ? k.get_si() : 0);
  }
  std::optional<BinaryPoint> best;
  Rational best_value;
  long best_int = 0;
  for (const BinaryPoint& p : enumerate_binary(inst, guard)) {
    if (small) {
      long v = 0;
      p.z.for_each([&](int j) { v += w[static_cast<std::size_t>(j)]; });
      p.delta.for_each([&](int i) { v += w[static_cast<std::size_t>(inst.n() + i)]; });
      if (!best || v > best_int) {
        best = p;
        best_int = v;
      }
    } else {
      Rational v = 0;
      p.z.for_each([&](int j) { v += objective[static_cast<std::size_t>(j)]; });
      p.delta.for_each([&](int i) { v += objective[static_cast<std::size_t>(inst.n() + i)]; });
      if (!best || v > best_value) {
        best = p;
        best_value = v;
      }
    }
  }
  if (!best) throw DomainError("ip_maximize: X^{l,u} is empty");
  if (small) {
    best_value = Rational(Integer(best_int), den);
    best_value.canonicalize();
  }
  return IPOptimum{best_value, best->to_point()};
}

/// Fiber maxima by enumeration, one per pattern in canonical order.
inline std::vector<Rational> brute_nu(const Instance& inst, const std::vector<Rational>& alpha,
                                      int guard = enumeration_guard()) {
  const std::vector<DeltaPattern> patterns = compute_delta_set(inst, guard);
  std::vector<std::optional<Rational>> best(patterns.size());
  for (const BinaryPoint& p : enumerate_binary(inst, guard)) {
    const auto it = std::find(patterns.begin(), patterns.end(), pattern_of(p));
    Rational v = 0;
    p.z.for_each([&](int j) { v += alpha[static_cast<std::size_t>(j)]; });
    auto& slot = best[static_cast<std::size_t>(it - patterns.begin())];
    if (!slot || v > *slot) slot = v;
  }
  std::vector<Rational> out;
  for (const auto& v : best) out.push_back(*v);
  return out;
}

/// Refusal message when the instance falls outside u >= 2, l <= n - |S_m|,
/// l < u for nested families; nullopt when the assumptions hold.
inline std::optional<std::string> nested_hull_assumption_failure(const Instance& inst) {
  if (!is_nested(inst)) return "family is not nested";
  if (inst.u() < 2) return "u >= 2 fails (degenerate regime: use degenerate_hull)";
  if (inst.l() > inst.n() - inst.set(inst.m() - 1).size()) {
    return "l <= n - |S_m| fails (high-floor regime: delta_i = 0 whenever |S_i| > n - l; use degenerate_hull)";
  }
  if (inst.l() >= inst.u()) return "l < u fails (project out a variable first)";
  return std::nullopt;
}

struct Discrepancy {
  std::vector<Rational> objective;
  Rational lp_value;
  Rational ip_value;
  std::vector<std::string> cuts;
};

struct CompletenessReport {
  std::uint64_t seed = 0;
  int trials = 0;
  int total_cuts = 0;
  std::vector<Discrepancy> discrepancies;
};

inline std::vector<Rational> random_objective(std::mt19937_64& rng, int dims, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Rational> out;
  for (int k = 0; k < dims; ++k) out.emplace_back(dist(rng));
  return out;
}

/// Cutting-plane LP value against the enumerated IP value for `trials`
/// seeded objectives in [-5, 5]^{n+m}.
inline CompletenessReport completeness_check(const Instance& inst, int trials, std::uint64_t seed,
                                             int guard = enumeration_guard()) {
  if (const auto why = nested_hull_assumption_failure(inst)) throw DomainError("completeness_check refused: " + *why);
  require_guard(inst.n(), guard, "completeness_check");
  CompletenessReport rep{seed, trials, 0, {}};
  std::mt19937_64 rng(seed);
  const CuttingPlaneSolver solver(inst);
  for (int t = 0; t < trials; ++t) {
    const std::vector<Rational> obj = random_objective(rng, inst.n() + inst.m(), -5, 5);
    const CuttingPlaneResult cp = solver.maximize(obj);
    const IPOptimum ip = ip_maximize(inst, obj, guard);
    rep.total_cuts += static_cast<int>(cp.cuts.size());
    if (cp.lp.status != LPStatus::kOptimal || cp.lp.value != ip.value) {
      Discrepancy d{obj, cp.lp.value, ip.value, {}};
      for (const Inequality& e : cp.cuts) d.cuts.push_back(e.tag);
      rep.discrepancies.push_back(std::move(d));
    }
  }
  return rep;
}

inline json to_json(const CompletenessReport& r) {
  json disc = json::array();
  for (const Discrepancy& d : r.discrepancies) {
    disc.push_back(json{{"objective", rational_list_to_json(d.objective)},
                        {"lp_value", to_string(d.lp_value)},
                        {"ip_value", to_string(d.ip_value)},
                        {"cuts", d.cuts}});
  }
  return json{{"seed", r.seed}, {"trials", r.trials}, {"total_cuts", r.total_cuts}, {"discrepancies", disc}};
}

}  // namespace cardcut
