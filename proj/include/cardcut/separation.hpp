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

// Exact separation for nested families. For each p the upper and lower
// mixing families reduce to picking a subset by sorted weights, so the most
// violated member over all (p, S') is found in polynomial time.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cardcut/core.hpp"
#include "cardcut/family.hpp"
#include "cardcut/linearization.hpp"
#include "cardcut/mixing.hpp"

namespace cardcut {

struct SeparationResult {
  bool found = false;
  std::optional<Inequality> inequality;
  Rational violation;
  std::string family;
  std::optional<int> p;
  std::optional<IndexSet> s_prime;
};

inline void require_box_point(const Instance& inst, const Point& pt) {
  if (pt.z.size() != static_cast<std::size_t>(inst.n()) || pt.delta.size() != static_cast<std::size_t>(inst.m())) {
    throw ParseError("point: dimensions do not match the instance");
  }
  for (std::size_t j = 0; j < pt.z.size(); ++j) {
    if (pt.z[j] < 0 || pt.z[j] > 1) throw DomainError("point: z_" + std::to_string(j + 1) + " outside [0, 1]");
  }
  for (std::size_t i = 0; i < pt.delta.size(); ++i) {
    if (pt.delta[i] < 0 || pt.delta[i] > 1) {
      throw DomainError("point: delta_" + std::to_string(i + 1) + " outside [0, 1]");
    }
  }
}

namespace detail {

// level[j] = first i with j in S_i, or m when j lies outside S_m.
inline std::vector<int> element_levels(const Instance& inst) {
  std::vector<int> level(static_cast<std::size_t>(inst.n()), inst.m());
  for (int i = inst.m() - 1; i >= 0; --i) inst.set(i).for_each([&](int j) { level[static_cast<std::size_t>(j)] = i; });
  return level;
}

inline std::vector<int> sorted_by_weight(std::vector<int> idx, const std::vector<Rational>& w) {
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return w[static_cast<std::size_t>(a)] > w[static_cast<std::size_t>(b)]; });
  return idx;
}

// Candidate beats incumbent on violation, then lower p, then S' earlier in
// enumeration (bit pattern) order.
inline bool improves(const SeparationResult& cand, const SeparationResult& best) {
  if (!best.inequality) return true;
  if (cand.violation != best.violation) return cand.violation > best.violation;
  if (*cand.p != *best.p) return *cand.p < *best.p;
  return bit_less(*cand.s_prime, *best.s_prime);
}

}  // namespace detail

inline SeparationResult separate_upper(const Instance& inst, const Point& pt) {
  require_nested(inst, "separate_upper");
  require_box_point(inst, pt);
  const std::vector<int> level = detail::element_levels(inst);
  const int m = inst.m();
  SeparationResult best;
  best.family = "mix-upper";
  if (inst.u() < 1) return best;
  std::vector<Rational> pi(static_cast<std::size_t>(inst.n()));
  for (int p = 0; p < m; ++p) {
    const Rational& dp = pt.delta[static_cast<std::size_t>(p)];
    std::vector<int> outside;
    IndexSet q(static_cast<std::size_t>(inst.n()));
    Rational total = inst.u() * dp - inst.u();
    for (int j = 0; j < inst.n(); ++j) {
      const auto jj = static_cast<std::size_t>(j);
      const int lv = level[jj];
      if (lv <= p) {
        pi[jj] = pt.z[jj];
        if (pi[jj] > 0) {
          q.insert(j);
          total += pi[jj];
        }
        continue;
      }
      pi[jj] = lv < m ? Rational(pt.z[jj] + pt.delta[static_cast<std::size_t>(lv)] - dp) : Rational(pt.z[jj] - dp);
      outside.push_back(j);
    }
    const std::vector<int> order = detail::sorted_by_weight(std::move(outside), pi);
    for (int k = 0; k < static_cast<int>(order.size()) && k < inst.u() - 1; ++k) {
      const int j = order[static_cast<std::size_t>(k)];
      if (pi[static_cast<std::size_t>(j)] <= 0) break;
      q.insert(j);
      total += pi[static_cast<std::size_t>(j)];
    }
    SeparationResult cand{false, std::nullopt, total, "mix-upper", p, q};
    if (detail::improves(cand, best)) {
      cand.inequality = mixing_upper(inst, p, q);
      best = std::move(cand);
    }
  }
  best.found = best.inequality && best.violation > 0;
  return best;
}

inline SeparationResult separate_lower(const Instance& inst, const Point& pt) {
  require_nested(inst, "separate_lower");
  require_box_point(inst, pt);
  const std::vector<int> level = detail::element_levels(inst);
  const int m = inst.m();
  const int cap = inst.n() - inst.l();
  SeparationResult best;
  best.family = "mix-lower";
  std::vector<Rational> sigma(static_cast<std::size_t>(inst.n()));
  for (int p = 0; p < m; ++p) {
    const Rational& dp = pt.delta[static_cast<std::size_t>(p)];
    const int sp = inst.set(p).size();
    const int prev = p == 0 ? 0 : inst.set(p - 1).size();
    const int lo = std::max(0, cap + 1 - sp);
    const int hi = cap - prev;
    std::vector<int> pool;
    for (int j = 0; j < inst.n(); ++j) {
      const auto jj = static_cast<std::size_t>(j);
      const int lv = level[jj];
      if (lv <= p) continue;
      sigma[jj] = lv < m ? Rational(dp - pt.delta[static_cast<std::size_t>(lv)] - pt.z[jj]) : Rational(dp - pt.z[jj]);
      pool.push_back(j);
    }
    const int limit = std::min(hi, static_cast<int>(pool.size()));
    if (lo > limit) continue;
    Rational total = (sp - cap) * dp;
    for (int i = p + 1; i < m; ++i) {
      total += (inst.set(i).size() - inst.set(i - 1).size()) * pt.delta[static_cast<std::size_t>(i)];
    }
    const std::vector<int> order = detail::sorted_by_weight(std::move(pool), sigma);
    IndexSet q(static_cast<std::size_t>(inst.n()));
    for (int k = 0; k < limit; ++k) {
      const int j = order[static_cast<std::size_t>(k)];
      if (k >= lo && sigma[static_cast<std::size_t>(j)] <= 0) break;
      q.insert(j);
      total += sigma[static_cast<std::size_t>(j)];
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

/// Most violated row among the reduced system, 2-link rows and both mixing
/// families. Ties go to the earlier family in that order.
inline SeparationResult separate_all(const Instance& inst, const Point& pt) {
  require_nested(inst, "separate_all");
  require_box_point(inst, pt);
  SeparationResult best;
  for (const Inequality& e : reduced_formulation(inst)) {
    const Rational v = -evaluate(e, pt);
    const bool link = e.tag.rfind("2-link", 0) == 0;
    if (!best.inequality || v > best.violation) {
      best = SeparationResult{false, e, v, link ? "2-link" : "linearization", std::nullopt, std::nullopt};
    }
  }
  for (SeparationResult r : {separate_upper(inst, pt), separate_lower(inst, pt)}) {
    if (r.inequality && r.violation > best.violation) best = std::move(r);
  }
  best.found = best.violation > 0;
  return best;
}

inline json to_json(const SeparationResult& r) {
  json out{{"found", r.found}, {"violation", to_string(r.violation)}, {"family", r.family}};
  out["inequality"] = r.inequality ? to_json(*r.inequality) : json(nullptr);
  out["p"] = r.p ? json(*r.p + 1) : json(nullptr);
  out["sprime"] = r.s_prime ? to_json(*r.s_prime) : json(nullptr);
  return out;
}

}  // namespace cardcut
