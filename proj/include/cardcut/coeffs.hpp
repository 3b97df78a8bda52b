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

// Fiber maxima nu_alpha, completion of alpha^T z into a valid inequality
// tight on every fiber, and the pattern-following predicate.

#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "cardcut/core.hpp"
#include "cardcut/family.hpp"
#include "cardcut/linalg.hpp"

namespace cardcut {

/// Patterns of Delta^{l,u} in canonical order with their decompositions.
/// Only built for proper instances.
struct FamilyAnalysis {
  std::vector<DeltaPattern> patterns;
  std::vector<Decomposition> decompositions;

  static FamilyAnalysis of(const Instance& inst, int guard = enumeration_guard()) {
    const ProperReport report = is_proper(inst, guard);
    if (!report.is_proper) {
      throw DomainError("instance is not proper: |Delta| = " + std::to_string(report.delta_count) +
                        ", affine rank " + std::to_string(report.affine_rank) + ", m + 1 = " +
                        std::to_string(inst.m() + 1) +
                        (report.closed_intersection ? "" : ", not closed under intersection"));
    }
    FamilyAnalysis out;
    out.patterns = compute_delta_set(inst, guard);
    for (const DeltaPattern& d : out.patterns) out.decompositions.push_back(decompose(inst, d));
    return out;
  }
};

struct FiberOptimum {
  Rational value;
  IndexSet argmax;
};

/// max alpha^T z over one fiber by the greedy: best element of each block,
/// then the largest remaining values, forced up to l and optional while
/// positive up to u.
inline FiberOptimum fiber_maximum(const Instance& inst, const Decomposition& d, const std::vector<Rational>& alpha) {
  auto better = [&](int a, int b) { return alpha[static_cast<std::size_t>(a)] > alpha[static_cast<std::size_t>(b)] ||
                                           (alpha[static_cast<std::size_t>(a)] == alpha[static_cast<std::size_t>(b)] && a < b); };
  FiberOptimum out{0, IndexSet(static_cast<std::size_t>(inst.n()))};
  for (const auto& [i, block] : d.blocks) {
    const std::vector<int> elems = block.elements();
    const int pick = *std::min_element(elems.begin(), elems.end(), better);
    out.argmax.insert(pick);
    out.value += alpha[static_cast<std::size_t>(pick)];
  }
  std::vector<int> pool = (d.j0 | out.argmax).complement().elements();
  std::sort(pool.begin(), pool.end(), better);
  const int picked = static_cast<int>(d.blocks.size());
  const int forced = std::max(inst.l() - picked, 0);
  const int capacity = inst.u() - picked;
  for (int k = 0; k < static_cast<int>(pool.size()) && k < capacity; ++k) {
    const Rational& v = alpha[static_cast<std::size_t>(pool[static_cast<std::size_t>(k)])];
    if (k >= forced && v <= 0) break;
    out.argmax.insert(pool[static_cast<std::size_t>(k)]);
    out.value += v;
  }
  return out;
}

inline void require_alpha_length(const Instance& inst, const std::vector<Rational>& alpha) {
  if (alpha.size() != static_cast<std::size_t>(inst.n())) {
    throw ParseError("alpha: expected " + std::to_string(inst.n()) + " entries, got " + std::to_string(alpha.size()));
  }
}

inline std::vector<Rational> nu(const Instance& inst, const FamilyAnalysis& fa, const std::vector<Rational>& alpha) {
  require_alpha_length(inst, alpha);
  std::vector<Rational> out;
  out.reserve(fa.decompositions.size());
  for (const Decomposition& d : fa.decompositions) out.push_back(fiber_maximum(inst, d, alpha).value);
  return out;
}

inline std::vector<Rational> nu(const Instance& inst, const std::vector<Rational>& alpha) {
  return nu(inst, FamilyAnalysis::of(inst), alpha);
}

/// Solves [1, -pattern^T] (gamma; beta) = nu over all patterns and returns
/// alpha^T z + beta^T delta <= gamma.
inline Inequality complete_inequality(const Instance& inst, const FamilyAnalysis& fa, const std::vector<Rational>& alpha) {
  const std::vector<Rational> values = nu(inst, fa, alpha);
  linalg::RationalMatrix a;
  for (const DeltaPattern& d : fa.patterns) {
    std::vector<Rational> row{1};
    for (int i = 0; i < inst.m(); ++i) row.emplace_back(d.bit(i) ? -1 : 0);
    a.push_back(std::move(row));
  }
  const auto sol = linalg::solve(std::move(a), values);
  if (!sol) throw InternalError("complete_inequality: pattern matrix singular for a proper instance");
  Inequality out;
  for (int j = 0; j < inst.n(); ++j) out.add_z(j, alpha[static_cast<std::size_t>(j)]);
  for (int i = 0; i < inst.m(); ++i) out.add_delta(i, (*sol)[static_cast<std::size_t>(i) + 1]);
  out.gamma = (*sol)[0];
  out.tag = "complete";
  return out;
}

inline Inequality complete_inequality(const Instance& inst, const std::vector<Rational>& alpha) {
  require_alpha_length(inst, alpha);
  return complete_inequality(inst, FamilyAnalysis::of(inst), alpha);
}

/// alpha_prime keeps the signs and the weak order of alpha.
inline bool follows_pattern(const std::vector<Rational>& alpha_prime, const std::vector<Rational>& alpha) {
  if (alpha_prime.size() != alpha.size()) throw ParseError("follows_pattern: length mismatch");
  const std::size_t n = alpha.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (alpha[j] >= 0 && alpha_prime[j] < 0) return false;
    if (alpha[j] <= 0 && alpha_prime[j] > 0) return false;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (alpha[a] >= alpha[b] && alpha_prime[a] < alpha_prime[b]) return false;
    }
  }
  return true;
}

}  // namespace cardcut
