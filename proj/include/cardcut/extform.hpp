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

// Disjunctive extended formulation of conv(X^{l,u}): one scaled copy of each
// fiber system per realizable pattern, glued by convex multipliers. Also a
// writer for the CPLEX LP text format.

#pragma once

#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cardcut/coeffs.hpp"
#include "cardcut/family.hpp"
#include "cardcut/lp_model.hpp"

namespace cardcut {

struct ExtendedFormulation {
  LPModel model;  // z1..zn, d1..dm first, so objectives over (z, delta) index directly
  std::vector<DeltaPattern> patterns;
  std::vector<int> lambda;               // per pattern
  std::vector<std::vector<int>> copies;  // per pattern, per j
};

inline ExtendedFormulation build_extended_formulation(const Instance& inst, int guard = enumeration_guard()) {
  const FamilyAnalysis fa = FamilyAnalysis::of(inst, guard);
  ExtendedFormulation ef;
  ef.model = zd_model(inst);
  ef.patterns = fa.patterns;
  const int n = inst.n();
  for (std::size_t k = 0; k < fa.patterns.size(); ++k) {
    const std::string tag = std::to_string(k + 1);
    ef.lambda.push_back(ef.model.add_variable("lam" + tag));
    std::vector<int> copy;
    for (int j = 0; j < n; ++j) copy.push_back(ef.model.add_variable("w" + tag + "_" + std::to_string(j + 1)));
    ef.copies.push_back(std::move(copy));
  }
  for (std::size_t k = 0; k < fa.patterns.size(); ++k) {
    const Decomposition& d = fa.decompositions[k];
    const std::string tag = std::to_string(k + 1);
    const int lam = ef.lambda[k];
    const std::vector<int>& w = ef.copies[k];
    LPModel& m = ef.model;
    for (int j = 0; j < n; ++j) {
      const std::string jt = std::to_string(j + 1);
      if (d.j0.contains(j)) {
        m.add_row("fix" + tag + "_" + jt, {{w[static_cast<std::size_t>(j)], 1}}, Sense::kEq, 0);
      } else {
        m.add_row("cap" + tag + "_" + jt, {{w[static_cast<std::size_t>(j)], 1}, {lam, -1}}, Sense::kLe, 0);
      }
    }
    for (const auto& [i, block] : d.blocks) {
      std::map<int, Rational> row{{lam, -1}};
      block.for_each([&](int j) { row.emplace(w[static_cast<std::size_t>(j)], 1); });
      m.add_row("block" + tag + "_" + std::to_string(i + 1), row, Sense::kGe, 0);
    }
    std::map<int, Rational> lo{{lam, -inst.l()}};
    std::map<int, Rational> hi{{lam, -inst.u()}};
    d.j0.complement().for_each([&](int j) {
      lo.emplace(w[static_cast<std::size_t>(j)], 1);
      hi.emplace(w[static_cast<std::size_t>(j)], 1);
    });
    m.add_row("cardlo" + tag, lo, Sense::kGe, 0);
    m.add_row("cardhi" + tag, hi, Sense::kLe, 0);
  }
  for (int j = 0; j < n; ++j) {
    std::map<int, Rational> row{{j, 1}};
    for (const auto& w : ef.copies) row.emplace(w[static_cast<std::size_t>(j)], -1);
    ef.model.add_row("linkz" + std::to_string(j + 1), row, Sense::kEq, 0);
  }
  for (int i = 0; i < inst.m(); ++i) {
    std::map<int, Rational> row{{n + i, 1}};
    for (std::size_t k = 0; k < fa.patterns.size(); ++k) {
      if (fa.patterns[k].bit(i)) row.emplace(ef.lambda[k], -1);
    }
    ef.model.add_row("linkd" + std::to_string(i + 1), row, Sense::kEq, 0);
  }
  std::map<int, Rational> convex;
  for (int lam : ef.lambda) convex.emplace(lam, 1);
  ef.model.add_row("convex", convex, Sense::kEq, 1);
  return ef;
}

namespace detail {

// Exact decimal text when the denominator has only factors 2 and 5.
inline std::optional<std::string> decimal_text(const Rational& v) {
  Integer den = v.get_den();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;
  const int places = std::max(twos, fives);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const Integer scaled = v.get_num() * scale / v.get_den();
  Integer mag = abs(scaled);
  std::string digits = mag.get_str();
  if (places > 0) {
    if (static_cast<int>(digits.size()) <= places) digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return (sgn(scaled) < 0 ? "-" : "") + digits;
}

inline bool all_decimal(const std::map<int, Rational>& coeffs, const Rational& extra) {
  if (!decimal_text(extra)) return false;
  for (const auto& [k, c] : coeffs) {
    if (!decimal_text(c)) return false;
  }
  return true;
}

// Row and right-hand side scaled by the common denominator when some entry
// has no exact decimal form.
inline std::pair<std::map<int, Rational>, Rational> lp_scaled(const std::map<int, Rational>& coeffs,
                                                                const Rational& rhs) {
  if (all_decimal(coeffs, rhs)) return {coeffs, rhs};
  Integer lcm = rhs.get_den();
  for (const auto& [k, c] : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::map<int, Rational> out;
  for (const auto& [k, c] : coeffs) out.emplace(k, c * lcm);
  return {out, rhs * lcm};
}

inline std::string lp_name(const std::string& raw, const char* fallback) {
  std::string out;
  for (char ch : raw) {
    const bool ok = std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.' || ch == '(' ||
                    ch == ')' || ch == '{' || ch == '}' || ch == ',';
    out += ok ? ch : '_';
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0])) || out[0] == '.') out = fallback + out;
  return out;
}

inline std::string lp_terms(const LPModel& model, const std::map<int, Rational>& coeffs) {
  std::string out;
  for (const auto& [k, c] : coeffs) {
    const std::string name = lp_name(model.variable(k).name, "x");
    const Rational mag = abs(c);
    out += sgn(c) < 0 ? " - " : (out.empty() ? " " : " + ");
    if (mag != 1) out += *decimal_text(mag) + " ";
    out += name;
  }
  return out.empty() ? " 0" : out;
}

}  // namespace detail

/// CPLEX LP text. Rows keep model order; bounds follow variable order.
inline std::string emit_lp(const LPModel& model, const std::map<int, Rational>& objective, ObjectiveSense sense) {
  for (const auto& [k, c] : objective) {
    if (k < 0 || k >= model.num_variables()) throw DomainError("emit_lp: objective references an undeclared variable");
  }
  std::ostringstream os;
  os << (sense == ObjectiveSense::kMaximize ? "Maximize\n" : "Minimize\n");
  const auto obj = detail::lp_scaled(objective, Rational(0));
  os << " obj:" << detail::lp_terms(model, obj.first) << "\n";
  os << "Subject To\n";
  std::set<std::string> used;
  auto unique = [&](std::string name) {
    std::string base = name;
    for (int k = 2; used.count(name); ++k) name = base + "_" + std::to_string(k);
    used.insert(name);
    return name;
  };
  auto emit_row = [&](const std::string& name, const std::map<int, Rational>& coeffs, Sense s, const Rational& rhs) {
    const auto [row, b] = detail::lp_scaled(coeffs, rhs);
    const char* op = s == Sense::kLe ? "<=" : s == Sense::kGe ? ">=" : "=";
    os << " " << unique(detail::lp_name(name, "r")) << ":" << detail::lp_terms(model, row) << " " << op << " "
       << *detail::decimal_text(b) << "\n";
  };
  for (const LPRow& r : model.rows()) emit_row(r.name, r.coeffs, r.sense, r.rhs);
  std::ostringstream bounds;
  for (int k = 0; k < model.num_variables(); ++k) {
    const LPVariable& v = model.variable(k);
    const std::string name = detail::lp_name(v.name, "x");
    std::optional<std::string> lo;  // nullopt: -inf
    std::optional<std::string> hi;  // nullopt: +inf
    if (v.lower) {
      lo = detail::decimal_text(*v.lower);
      if (!lo) emit_row("lb_" + v.name, {{k, Rational(1)}}, Sense::kGe, *v.lower);
    }
    if (v.upper) {
      hi = detail::decimal_text(*v.upper);
      if (!hi) emit_row("ub_" + v.name, {{k, Rational(1)}}, Sense::kLe, *v.upper);
    }
    if (lo == "0" && !hi) continue;
    if (lo == "0") {
      bounds << " " << name << " <= " << *hi << "\n";
    } else if (!lo && !hi) {
      bounds << " " << name << " free\n";
    } else if (!lo) {
      bounds << " -inf <= " << name << " <= " << *hi << "\n";
    } else if (hi) {
      bounds << " " << *lo << " <= " << name << " <= " << *hi << "\n";
    } else {
      bounds << " " << name << " >= " << *lo << "\n";
    }
  }
  os << "Bounds\n" << bounds.str() << "End\n";
  return os.str();
}

inline std::string emit_lp(const LPModel& model) { return emit_lp(model, model.objective(), model.objective_sense()); }

}  // namespace cardcut
