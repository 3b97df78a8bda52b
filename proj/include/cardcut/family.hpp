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

// Structure of the set family: closure properties, the projection
// Delta^{l,u} of X^{l,u} onto delta, properness, and the per-pattern fiber
// decomposition (I*, J_0, {J_i}).

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cardcut/core.hpp"
#include "cardcut/linalg.hpp"

namespace cardcut {

/// A realizable delta pattern, stored as the set of i with delta_i = 1.
struct DeltaPattern {
  IndexSet ones;

  int size() const { return static_cast<int>(ones.universe()); }
  bool bit(int i) const { return ones.contains(i); }

  std::vector<int> bits() const {
    std::vector<int> out(ones.universe(), 0);
    ones.for_each([&](int i) { out[static_cast<std::size_t>(i)] = 1; });
    return out;
  }

  static DeltaPattern from_bits(const std::vector<int>& bits) {
    DeltaPattern p{IndexSet(bits.size())};
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != 0 && bits[i] != 1) throw ParseError("pattern: entries must be 0 or 1");
      if (bits[i] == 1) p.ones.insert(static_cast<int>(i));
    }
    return p;
  }

  friend bool operator==(const DeltaPattern&, const DeltaPattern&) = default;
};

/// Canonical order: ascending by sum_i delta_i 2^i, so the all-zero pattern
/// comes first and, for nested families, delta^[0], ..., delta^[m] in turn.
inline bool canonical_less(const DeltaPattern& a, const DeltaPattern& b) {
  for (int i = a.size() - 1; i >= 0; --i) {
    if (a.bit(i) != b.bit(i)) return b.bit(i);
  }
  return false;
}

struct PairWitness {
  bool holds = true;
  std::optional<std::pair<int, int>> witness;  // 0-based (i, j), i < j
};

inline PairWitness is_closed_under_intersection(const Instance& inst) {
  for (int i = 0; i < inst.m(); ++i) {
    for (int j = i + 1; j < inst.m(); ++j) {
      const IndexSet meet = inst.set(i) & inst.set(j);
      if (meet.empty()) continue;
      const auto& fam = inst.family();
      if (std::find(fam.begin(), fam.end(), meet) == fam.end()) return {false, std::make_pair(i, j)};
    }
  }
  return {};
}

inline PairWitness is_closed_under_union(const Instance& inst) {
  for (int i = 0; i < inst.m(); ++i) {
    for (int j = i + 1; j < inst.m(); ++j) {
      const IndexSet join = inst.set(i) | inst.set(j);
      const auto& fam = inst.family();
      if (std::find(fam.begin(), fam.end(), join) == fam.end()) return {false, std::make_pair(i, j)};
    }
  }
  return {};
}

/// S_1 subset S_2 subset ... subset S_m, strictly, in the stored order.
inline bool is_nested(const Instance& inst) {
  for (int i = 0; i + 1 < inst.m(); ++i) {
    if (!inst.set(i).is_proper_subset_of(inst.set(i + 1))) return false;
  }
  return true;
}

inline void require_nested(const Instance& inst, std::string_view op) {
  if (!is_nested(inst)) {
    throw DomainError(std::string(op) + ": family is not nested (S_1 subset ... subset S_m in the given order)");
  }
}

inline DeltaPattern pattern_of(const BinaryPoint& p) { return DeltaPattern{p.delta}; }

/// Distinct delta patterns over X^{l,u}, in canonical order. Full enumeration.
inline std::vector<DeltaPattern> compute_delta_set(const Instance& inst, int guard = enumeration_guard()) {
  auto less = [](const DeltaPattern& a, const DeltaPattern& b) { return canonical_less(a, b); };
  std::set<DeltaPattern, decltype(less)> seen(less);
  for (const BinaryPoint& p : enumerate_binary(inst, guard)) seen.insert(pattern_of(p));
  return {seen.begin(), seen.end()};
}

/// Closed form for nested families with l <= n - |S_m|, u >= 1: the m + 1
/// monotone patterns delta^[0], ..., delta^[m].
inline std::vector<DeltaPattern> nested_delta_closed_form(int m) {
  std::vector<DeltaPattern> out;
  for (int p = 0; p <= m; ++p) {
    DeltaPattern d{IndexSet(static_cast<std::size_t>(m))};
    for (int i = 0; i < p; ++i) d.ones.insert(i);
    out.push_back(std::move(d));
  }
  return out;
}

/// Rank of the rows [1 | delta^T]; m + 1 patterns are affinely independent
/// iff this equals m + 1.
inline int pattern_affine_rank(const std::vector<DeltaPattern>& patterns, int m) {
  linalg::IntegerMatrix rows;
  for (const DeltaPattern& d : patterns) {
    std::vector<Integer> row{1};
    for (int i = 0; i < m; ++i) row.emplace_back(d.bit(i) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return linalg::rank(std::move(rows));
}

struct ProperReport {
  bool is_proper = false;
  int delta_count = 0;
  bool closed_intersection = false;
  int affine_rank = 0;
  std::optional<std::pair<int, int>> witness;  // failing intersection pair
};

inline ProperReport is_proper(const Instance& inst, int guard = enumeration_guard()) {
  ProperReport r;
  const PairWitness closure = is_closed_under_intersection(inst);
  r.closed_intersection = closure.holds;
  r.witness = closure.witness;
  const auto patterns = compute_delta_set(inst, guard);
  r.delta_count = static_cast<int>(patterns.size());
  r.affine_rank = pattern_affine_rank(patterns, inst.m());
  r.is_proper = r.closed_intersection && r.delta_count == inst.m() + 1 && r.affine_rank == inst.m() + 1;
  return r;
}

struct Decomposition {
  DeltaPattern pattern;
  std::vector<int> i_zero;  // I_0 = {i : pattern_i = 0}
  std::vector<int> i_star;  // minimal members of {S_i : i in I_0}, ascending
  IndexSet j0;
  std::vector<std::pair<int, IndexSet>> blocks;  // i in I* -> J_i = S_i \ J_0
};

/// Fiber decomposition of one pattern. Requires closure under nonempty
/// intersection; refuses patterns that no feasible z realizes.
inline Decomposition decompose(const Instance& inst, const DeltaPattern& pattern) {
  if (pattern.size() != inst.m()) throw DomainError("decompose: pattern length differs from m");
  const PairWitness closure = is_closed_under_intersection(inst);
  if (!closure.holds) {
    throw DomainError("decompose: family not closed under nonempty intersection (S_" +
                      std::to_string(closure.witness->first + 1) + ", S_" +
                      std::to_string(closure.witness->second + 1) + ")");
  }
  Decomposition d{pattern, {}, {}, IndexSet(static_cast<std::size_t>(inst.n())), {}};
  for (int i = 0; i < inst.m(); ++i) {
    if (pattern.bit(i)) {
      d.j0 |= inst.set(i);
    } else {
      d.i_zero.push_back(i);
    }
  }
  for (int i : d.i_zero) {
    const bool minimal = std::none_of(d.i_zero.begin(), d.i_zero.end(), [&](int k) {
      return inst.set(k).is_proper_subset_of(inst.set(i));
    });
    if (minimal) d.i_star.push_back(i);
  }
  for (int i : d.i_zero) {
    if (inst.set(i).is_subset_of(d.j0)) {
      throw DomainError("decompose: pattern unrealizable, S_" + std::to_string(i + 1) +
                        " lies inside J_0 but delta_" + std::to_string(i + 1) + " = 0");
    }
  }
  IndexSet covered = d.j0;
  for (int i : d.i_star) {
    IndexSet block = inst.set(i) - d.j0;
    if (covered.intersects(block)) throw InternalError("decompose: blocks overlap despite closure");
    covered |= block;
    d.blocks.emplace_back(i, std::move(block));
  }
  const int free_count = inst.n() - d.j0.size();
  const int forced = static_cast<int>(d.i_star.size());
  if (std::max(inst.l(), forced) > std::min(inst.u(), free_count)) {
    throw DomainError("decompose: pattern unrealizable under cardinality bounds [" +
                      std::to_string(inst.l()) + ", " + std::to_string(inst.u()) + "]");
  }
  return d;
}

/// Hull of the fiber {z : (z, pattern) in X^{l,u}} over z only:
/// z_j = 0 on J_0, one pick per block, cardinality over J \ J_0, unit box.
inline std::vector<Inequality> fiber_hull_inequalities(const Instance& inst, const DeltaPattern& pattern) {
  const Decomposition d = decompose(inst, pattern);
  std::vector<Inequality> out;
  d.j0.for_each([&](int j) {
    Inequality e;
    e.add_z(j, 1);
    e.sense = Sense::kEq;
    e.tag = "fix(" + std::to_string(j + 1) + ")";
    out.push_back(std::move(e));
  });
  for (const auto& [i, block] : d.blocks) {
    Inequality e;
    block.for_each([&](int j) { e.add_z(j, 1); });
    e.gamma = 1;
    e.sense = Sense::kGe;
    e.tag = "block(" + std::to_string(i + 1) + ")";
    out.push_back(std::move(e));
  }
  const IndexSet free = d.j0.complement();
  Inequality lo;
  Inequality hi;
  free.for_each([&](int j) {
    lo.add_z(j, 1);
    hi.add_z(j, 1);
  });
  lo.gamma = inst.l();
  lo.sense = Sense::kGe;
  lo.tag = "cardinality-lower";
  hi.gamma = inst.u();
  hi.tag = "cardinality-upper";
  out.push_back(std::move(lo));
  out.push_back(std::move(hi));
  for (int j = 0; j < inst.n(); ++j) {
    Inequality nonneg;
    nonneg.add_z(j, 1);
    nonneg.sense = Sense::kGe;
    nonneg.tag = "z-nonneg(" + std::to_string(j + 1) + ")";
    out.push_back(std::move(nonneg));
    Inequality upper;
    upper.add_z(j, 1);
    upper.gamma = 1;
    upper.tag = "z-upper(" + std::to_string(j + 1) + ")";
    out.push_back(std::move(upper));
  }
  return out;
}

/// Largest subfamily of pairwise incomparable sets, by brute force over
/// subsets of I. Delta^{l,u} equals Delta^{0,n} when l <= n - |union S_i|
/// and u is at least this number.
inline int max_incomparable_subfamily(const Instance& inst) {
  if (inst.m() > 20) throw GuardError("max_incomparable_subfamily refused: m exceeds 20");
  int best = 0;
  const std::uint32_t limit = std::uint32_t{1} << inst.m();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    const int k = std::popcount(mask);
    if (k <= best) continue;
    bool ok = true;
    for (int i = 0; i < inst.m() && ok; ++i) {
      if (!((mask >> i) & 1U)) continue;
      for (int j = i + 1; j < inst.m() && ok; ++j) {
        if (!((mask >> j) & 1U)) continue;
        ok = !inst.set(i).is_subset_of(inst.set(j)) && !inst.set(j).is_subset_of(inst.set(i));
      }
    }
    if (ok) best = k;
  }
  return best;
}

inline bool delta_matches_full_cube_condition(const Instance& inst) {
  IndexSet all(static_cast<std::size_t>(inst.n()));
  for (const IndexSet& s : inst.family()) all |= s;
  return inst.l() <= inst.n() - all.size() && inst.u() >= max_incomparable_subfamily(inst);
}

inline json to_json(const DeltaPattern& d) { return d.bits(); }

inline json to_json(const ProperReport& r) {
  json out{{"is_proper", r.is_proper},
           {"delta_count", r.delta_count},
           {"closed_intersection", r.closed_intersection},
           {"affine_rank", r.affine_rank}};
  out["witness"] = r.witness ? json::array({r.witness->first + 1, r.witness->second + 1}) : json(nullptr);
  return out;
}

inline json to_json(const Decomposition& d) {
  json blocks = json::array();
  for (const auto& [i, b] : d.blocks) blocks.push_back(json{{"i", i + 1}, {"block", to_json(b)}});
  json istar = json::array();
  for (int i : d.i_star) istar.push_back(i + 1);
  return json{{"pattern", to_json(d.pattern)}, {"i_star", istar}, {"j0", to_json(d.j0)}, {"blocks", blocks}};
}

}  // namespace cardcut
