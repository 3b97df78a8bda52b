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

// Domain types shared by every module: the problem instance, points of
// X^{l,u}, and linear inequalities over (z, delta). Indices are 0-based in
// memory and 1-based in every external document.

#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cardcut/errors.hpp"
#include "cardcut/index_set.hpp"
#include "cardcut/rational.hpp"

namespace cardcut {

using json = nlohmann::json;

inline constexpr int kDefaultGuard = 24;

/// Largest n the exhaustive paths accept: CARDCUT_GUARD_N if set, else 24.
inline int enumeration_guard() {
  if (const char* env = std::getenv("CARDCUT_GUARD_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && v >= 0 && v <= 62) return static_cast<int>(v);
    throw ParseError("CARDCUT_GUARD_N must be an integer in [0, 62], got '" + std::string(env) + "'");
  }
  return kDefaultGuard;
}

inline void require_guard(int n, int guard, std::string_view what) {
  if (n > guard) {
    throw GuardError(std::string(what) + " refused: n = " + std::to_string(n) +
                     " exceeds the enumeration limit " + std::to_string(guard));
  }
}

/// Ground set J = {0..n-1}, family S_0..S_{m-1}, cardinality bounds l <= sum z <= u.
class Instance {
 public:
  Instance() = default;

  /// Validates 0 <= l <= u <= n, nonempty in-range sets, pairwise distinct.
  Instance(int n, std::vector<IndexSet> family, int l, int u)
      : n_(n), family_(std::move(family)), l_(l), u_(u) {
    if (n_ <= 0) throw ParseError("n: must be a positive integer");
    if (l_ < 0) throw ParseError("l: must be nonnegative");
    if (l_ > u_) throw ParseError("l: l exceeds u");
    if (u_ > n_) throw ParseError("u: u exceeds n");
    for (std::size_t i = 0; i < family_.size(); ++i) {
      const std::string field = "sets[" + std::to_string(i) + "]";
      if (family_[i].universe() != static_cast<std::size_t>(n_)) {
        throw ParseError(field + ": universe does not match n");
      }
      if (family_[i].empty()) throw ParseError(field + ": empty set");
      for (std::size_t k = 0; k < i; ++k) {
        if (family_[k] == family_[i]) {
          throw ParseError(field + ": duplicate of sets[" + std::to_string(k) + "]");
        }
      }
    }
  }

  /// Sets given as 1-based index lists.
  static Instance from_lists(int n, const std::vector<std::vector<int>>& sets, int l, int u) {
    if (n <= 0) throw ParseError("n: must be a positive integer");
    std::vector<IndexSet> family;
    family.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      IndexSet s(static_cast<std::size_t>(n));
      for (int idx : sets[i]) {
        if (idx < 1 || idx > n) {
          throw ParseError("sets[" + std::to_string(i) + "]: index " + std::to_string(idx) +
                           " out of range 1.." + std::to_string(n));
        }
        if (s.contains(idx - 1)) {
          throw ParseError("sets[" + std::to_string(i) + "]: repeated index " + std::to_string(idx));
        }
        s.insert(idx - 1);
      }
      family.push_back(std::move(s));
    }
    return Instance(n, std::move(family), l, u);
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(family_.size()); }
  int l() const { return l_; }
  int u() const { return u_; }
  const std::vector<IndexSet>& family() const { return family_; }
  const IndexSet& set(int i) const { return family_.at(static_cast<std::size_t>(i)); }
  IndexSet ground() const { return IndexSet::full(static_cast<std::size_t>(n_)); }

  /// Same family with new cardinality bounds.
  Instance with_bounds(int l, int u) const { return Instance(n_, family_, l, u); }

 private:
  int n_ = 0;
  std::vector<IndexSet> family_;
  int l_ = 0;
  int u_ = 0;
};

/// (z, delta) with exact entries. Integral members of X^{l,u} and fractional
/// separation queries share this type.
struct Point {
  std::vector<Rational> z;
  std::vector<Rational> delta;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Integral point stored as the support of z and the set of i with delta_i = 1.
struct BinaryPoint {
  IndexSet z;
  IndexSet delta;

  Point to_point() const {
    Point p;
    p.z.resize(z.universe());
    p.delta.resize(delta.universe());
    z.for_each([&](int j) { p.z[static_cast<std::size_t>(j)] = 1; });
    delta.for_each([&](int i) { p.delta[static_cast<std::size_t>(i)] = 1; });
    return p;
  }
};

enum class Sense { kLe, kGe, kEq };

inline std::string to_string(Sense s) {
  switch (s) {
    case Sense::kLe:
      return "<=";
    case Sense::kGe:
      return ">=";
    case Sense::kEq:
      return "=";
  }
  return "?";
}

/// alpha^T z + beta^T delta (sense) gamma with sparse, zero-free coefficients.
struct Inequality {
  std::map<int, Rational> alpha;
  std::map<int, Rational> beta;
  Rational gamma;
  Sense sense = Sense::kLe;
  std::string tag;

  Inequality& add_z(int j, const Rational& c) { return accumulate(alpha, j, c); }
  Inequality& add_delta(int i, const Rational& c) { return accumulate(beta, i, c); }

  Rational z_coeff(int j) const { return lookup(alpha, j); }
  Rational delta_coeff(int i) const { return lookup(beta, i); }

  /// Same constraint written with sense <= (equalities are left alone).
  Inequality as_le() const {
    if (sense != Sense::kGe) return *this;
    Inequality out = *this;
    for (auto& [k, v] : out.alpha) v = -v;
    for (auto& [k, v] : out.beta) v = -v;
    out.gamma = -out.gamma;
    out.sense = Sense::kLe;
    return out;
  }

  /// Coefficients, right-hand side, and sense equal; tags ignored.
  bool same_constraint(const Inequality& o) const {
    const Inequality a = as_le();
    const Inequality b = o.as_le();
    return a.sense == b.sense && a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
  }

 private:
  Inequality& accumulate(std::map<int, Rational>& map, int k, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = map.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) map.erase(it);
    }
    return *this;
  }
  static Rational lookup(const std::map<int, Rational>& map, int k) {
    const auto it = map.find(k);
    return it == map.end() ? Rational(0) : it->second;
  }
};

inline Rational lhs_value(const Inequality& ineq, const Point& p) {
  Rational lhs = 0;
  for (const auto& [j, c] : ineq.alpha) lhs += c * p.z.at(static_cast<std::size_t>(j));
  for (const auto& [i, c] : ineq.beta) lhs += c * p.delta.at(static_cast<std::size_t>(i));
  return lhs;
}

inline Rational lhs_value(const Inequality& ineq, const BinaryPoint& p) {
  Rational lhs = 0;
  for (const auto& [j, c] : ineq.alpha) {
    if (p.z.contains(j)) lhs += c;
  }
  for (const auto& [i, c] : ineq.beta) {
    if (p.delta.contains(i)) lhs += c;
  }
  return lhs;
}

/// gamma - lhs for <= and =, lhs - gamma for >=. Negative means violated
/// (for equalities any nonzero value is a violation).
template <typename P>
Rational evaluate(const Inequality& ineq, const P& p) {
  const Rational lhs = lhs_value(ineq, p);
  return ineq.sense == Sense::kGe ? Rational(lhs - ineq.gamma) : Rational(ineq.gamma - lhs);
}

template <typename P>
bool satisfies(const Inequality& ineq, const P& p) {
  const Rational s = evaluate(ineq, p);
  return ineq.sense == Sense::kEq ? s == 0 : s >= 0;
}

/// v^U: z is the indicator of U, delta_i = 1 iff S_i misses U.
inline BinaryPoint lift_binary(const Instance& inst, const IndexSet& subset) {
  if (subset.universe() != static_cast<std::size_t>(inst.n())) {
    throw DomainError("lift_point: subset universe does not match n");
  }
  BinaryPoint p{subset, IndexSet(static_cast<std::size_t>(inst.m()))};
  for (int i = 0; i < inst.m(); ++i) {
    if (!inst.set(i).intersects(subset)) p.delta.insert(i);
  }
  return p;
}

inline Point lift_point(const Instance& inst, const IndexSet& subset) {
  const int k = subset.size();
  if (k < inst.l() || k > inst.u()) {
    throw DomainError("lift_point: |U| = " + std::to_string(k) + " outside [" +
                      std::to_string(inst.l()) + ", " + std::to_string(inst.u()) + "]");
  }
  return lift_binary(inst, subset).to_point();
}

/// All v^U with l <= |U| <= u, masks in increasing order (bit j is element j).
inline std::vector<BinaryPoint> enumerate_binary(const Instance& inst, int guard = enumeration_guard()) {
  require_guard(inst.n(), guard, "enumeration");
  std::vector<BinaryPoint> out;
  const std::uint64_t limit = std::uint64_t{1} << inst.n();
  const auto universe = static_cast<std::size_t>(inst.n());
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const int k = std::popcount(mask);
    if (k < inst.l() || k > inst.u()) continue;
    out.push_back(lift_binary(inst, IndexSet::from_mask(universe, mask)));
  }
  return out;
}

inline std::vector<Point> enumerate_points(const Instance& inst, int guard = enumeration_guard()) {
  std::vector<Point> out;
  for (const BinaryPoint& b : enumerate_binary(inst, guard)) out.push_back(b.to_point());
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline Rational rational_from_json(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError&) {
      throw ParseError(field + ": not a rational '" + v.get<std::string>() + "'");
    }
  }
  if (v.is_number_float()) {
    throw ParseError(field + ": floating-point numbers are not accepted, use \"p/q\"");
  }
  throw ParseError(field + ": expected a rational");
}

inline std::vector<Rational> rational_list_from_json(const json& v, const std::string& field) {
  if (!v.is_array()) throw ParseError(field + ": expected an array");
  std::vector<Rational> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(rational_from_json(v[k], field + "[" + std::to_string(k) + "]"));
  }
  return out;
}

inline json rational_list_to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(to_string(v));
  return out;
}

/// 1-based element list.
inline json to_json(const IndexSet& s) {
  json out = json::array();
  s.for_each([&](int e) { out.push_back(e + 1); });
  return out;
}

inline Instance instance_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("instance: expected a JSON object");
  auto int_field = [&](const char* name) {
    if (!doc.contains(name)) throw ParseError(std::string(name) + ": missing");
    const json& v = doc.at(name);
    if (!v.is_number_integer()) throw ParseError(std::string(name) + ": expected an integer");
    return v.get<int>();
  };
  const int n = int_field("n");
  const int l = int_field("l");
  const int u = int_field("u");
  if (!doc.contains("sets") || !doc.at("sets").is_array()) throw ParseError("sets: expected a list of integer lists");
  std::vector<std::vector<int>> sets;
  for (std::size_t i = 0; i < doc.at("sets").size(); ++i) {
    const json& s = doc.at("sets")[i];
    const std::string field = "sets[" + std::to_string(i) + "]";
    if (!s.is_array()) throw ParseError(field + ": expected a list of integers");
    std::vector<int> members;
    for (const json& e : s) {
      if (!e.is_number_integer()) throw ParseError(field + ": expected integers");
      members.push_back(e.get<int>());
    }
    sets.push_back(std::move(members));
  }
  return Instance::from_lists(n, sets, l, u);
}

inline Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance: invalid JSON: ") + e.what());
  }
  return instance_from_json(doc);
}

inline json to_json(const Instance& inst) {
  json sets = json::array();
  for (const IndexSet& s : inst.family()) sets.push_back(to_json(s));
  return json{{"n", inst.n()}, {"l", inst.l()}, {"u", inst.u()}, {"sets", sets}};
}

inline json to_json(const Point& p) {
  return json{{"z", rational_list_to_json(p.z)}, {"delta", rational_list_to_json(p.delta)}};
}

/// Reads {"z": [...], "delta": [...]} and checks the lengths against `inst`.
inline Point point_from_json(const json& doc, const Instance& inst) {
  if (!doc.is_object() || !doc.contains("z") || !doc.contains("delta")) {
    throw ParseError("point: expected an object with fields z and delta");
  }
  Point p{rational_list_from_json(doc.at("z"), "z"), rational_list_from_json(doc.at("delta"), "delta")};
  if (p.z.size() != static_cast<std::size_t>(inst.n())) {
    throw ParseError("z: expected " + std::to_string(inst.n()) + " entries");
  }
  if (p.delta.size() != static_cast<std::size_t>(inst.m())) {
    throw ParseError("delta: expected " + std::to_string(inst.m()) + " entries");
  }
  return p;
}

inline json to_json(const Inequality& ineq) {
  json alpha = json::object();
  for (const auto& [j, c] : ineq.alpha) alpha[std::to_string(j + 1)] = to_string(c);
  json beta = json::object();
  for (const auto& [i, c] : ineq.beta) beta[std::to_string(i + 1)] = to_string(c);
  return json{{"alpha", alpha},
              {"beta", beta},
              {"gamma", to_string(ineq.gamma)},
              {"sense", to_string(ineq.sense)},
              {"tag", ineq.tag}};
}

/// Human-readable form, e.g. "z1 + z2 + 2 d1 <= 3".
inline std::string format(const Inequality& ineq) {
  std::string out;
  auto term = [&](const Rational& c, const std::string& var) {
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (mag != 1) out += (is_integer(mag) ? mag.get_num().get_str() : mag.get_str()) + " ";
    out += var;
  };
  for (const auto& [j, c] : ineq.alpha) term(c, "z" + std::to_string(j + 1));
  for (const auto& [i, c] : ineq.beta) term(c, "d" + std::to_string(i + 1));
  if (out.empty()) out = "0";
  return out + " " + to_string(ineq.sense) + " " + ineq.gamma.get_str();
}

}  // namespace cardcut
