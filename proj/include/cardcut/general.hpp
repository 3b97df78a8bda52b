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

// Lifted inequalities for arbitrary families, built over an ordered list of
// distinct members S_[1], ..., S_[t]. On nested families with the order
// p, p+1, ..., m they coincide with the mixing rows.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cardcut/core.hpp"

namespace cardcut {

namespace detail {

inline void check_order(const Instance& inst, const std::vector<int>& order, const IndexSet& s_prime,
                        std::string_view op) {
  if (order.empty()) throw DomainError(std::string(op) + ": empty order");
  std::vector<bool> seen(static_cast<std::size_t>(inst.m()), false);
  for (int i : order) {
    if (i < 0 || i >= inst.m()) {
      throw DomainError(std::string(op) + ": set index " + std::to_string(i + 1) + " outside 1.." +
                        std::to_string(inst.m()));
    }
    if (seen[static_cast<std::size_t>(i)]) {
      throw DomainError(std::string(op) + ": duplicate set index " + std::to_string(i + 1));
    }
    seen[static_cast<std::size_t>(i)] = true;
  }
  if (s_prime.universe() != static_cast<std::size_t>(inst.n())) {
    throw DomainError(std::string(op) + ": S' universe does not match n");
  }
}

inline std::string order_tag(const char* name, const std::vector<int>& order, const IndexSet& s) {
  std::string out = std::string(name) + "([";
  for (std::size_t k = 0; k < order.size(); ++k) out += (k ? "," : "") + std::to_string(order[k] + 1);
  return out + "]," + s.to_string() + ")";
}

}  // namespace detail

/// Position (0-based in order) of the first member breaking the upper
/// precondition |S' \ (S_[1] n S_[i])| <= u, if any.
inline std::optional<int> lifted_upper_violation(const Instance& inst, const std::vector<int>& order,
                                                 const IndexSet& s_prime) {
  const IndexSet& first = inst.set(order.front());
  for (std::size_t k = 1; k < order.size(); ++k) {
    if ((s_prime - (first & inst.set(order[k]))).size() > inst.u()) return static_cast<int>(k);
  }
  return std::nullopt;
}

inline std::optional<int> lifted_lower_violation(const Instance& inst, const std::vector<int>& order,
                                                 const IndexSet& s_prime) {
  const IndexSet& first = inst.set(order.front());
  for (std::size_t k = 1; k < order.size(); ++k) {
    if ((s_prime | (first & inst.set(order[k]))).size() < inst.n() - inst.l()) return static_cast<int>(k);
  }
  return std::nullopt;
}

/// sum_{S'} z + (u - |S' \ S_[1]|) delta_[1]
///   + sum_{i >= 2} |S' n S_[i] \ (S_[1] u ... u S_[i-1])| delta_[i] <= u.
inline Inequality lifted_upper(const Instance& inst, const std::vector<int>& order, const IndexSet& s_prime) {
  detail::check_order(inst, order, s_prime, "lifted_upper");
  if (const auto bad = lifted_upper_violation(inst, order, s_prime)) {
    const int i = order[static_cast<std::size_t>(*bad)];
    throw DomainError("lifted_upper: |S' \\ (S_" + std::to_string(order.front() + 1) + " n S_" +
                      std::to_string(i + 1) + ")| exceeds u = " + std::to_string(inst.u()));
  }
  Inequality out;
  s_prime.for_each([&](int j) { out.add_z(j, 1); });
  IndexSet covered = inst.set(order.front());
  out.add_delta(order.front(), inst.u() - (s_prime - covered).size());
  for (std::size_t k = 1; k < order.size(); ++k) {
    const IndexSet& s = inst.set(order[k]);
    out.add_delta(order[k], ((s_prime & s) - covered).size());
    covered |= s;
  }
  out.gamma = inst.u();
  out.tag = detail::order_tag("lifted-upper", order, s_prime);
  return out;
}

/// -sum_{S'} z + (|S' u S_[1]| - n + l) delta_[1]
///   + sum_{i >= 2} |S_[i] \ (S_[1] u ... u S_[i-1]) \ S'| delta_[i] <= 0.
inline Inequality lifted_lower(const Instance& inst, const std::vector<int>& order, const IndexSet& s_prime) {
  detail::check_order(inst, order, s_prime, "lifted_lower");
  if (const auto bad = lifted_lower_violation(inst, order, s_prime)) {
    const int i = order[static_cast<std::size_t>(*bad)];
    throw DomainError("lifted_lower: |S' u (S_" + std::to_string(order.front() + 1) + " n S_" +
                      std::to_string(i + 1) + ")| below n - l = " + std::to_string(inst.n() - inst.l()));
  }
  Inequality out;
  s_prime.for_each([&](int j) { out.add_z(j, -1); });
  IndexSet covered = inst.set(order.front());
  out.add_delta(order.front(), (s_prime | covered).size() - inst.n() + inst.l());
  for (std::size_t k = 1; k < order.size(); ++k) {
    const IndexSet& s = inst.set(order[k]);
    out.add_delta(order[k], ((s - covered) - s_prime).size());
    covered |= s;
  }
  out.gamma = 0;
  out.tag = detail::order_tag("lifted-lower", order, s_prime);
  return out;
}

/// Heuristic lifting order: starting from `first`, repeatedly append the
/// unused set with the largest next coefficient among those keeping the
/// precondition (lowest index on ties), until no positive coefficient is
/// left or `max_length` sets are used. Not optimal in general.
inline std::vector<int> greedy_lifting_order(const Instance& inst, int first, const IndexSet& s_prime, bool upper,
                                             int max_length) {
  std::vector<int> order{first};
  detail::check_order(inst, order, s_prime, "greedy_lifting_order");
  IndexSet covered = inst.set(first);
  while (static_cast<int>(order.size()) < max_length) {
    int pick = -1;
    int best = 0;
    for (int i = 0; i < inst.m(); ++i) {
      if (std::find(order.begin(), order.end(), i) != order.end()) continue;
      const IndexSet meet = inst.set(first) & inst.set(i);
      const bool ok = upper ? (s_prime - meet).size() <= inst.u() : (s_prime | meet).size() >= inst.n() - inst.l();
      if (!ok) continue;
      const int coeff = upper ? ((s_prime & inst.set(i)) - covered).size() : ((inst.set(i) - covered) - s_prime).size();
      if (coeff > best) {
        best = coeff;
        pick = i;
      }
    }
    if (pick < 0) break;
    order.push_back(pick);
    covered |= inst.set(pick);
  }
  return order;
}

}  // namespace cardcut
