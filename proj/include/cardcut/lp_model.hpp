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

// A small named-variable LP container shared by the extended formulation,
// the cutting-plane driver and the LP text writer.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cardcut/core.hpp"

namespace cardcut {

struct LPVariable {
  std::string name;
  std::optional<Rational> lower = Rational(0);  // nullopt: -infinity
  std::optional<Rational> upper;                // nullopt: +infinity
};

struct LPRow {
  std::string name;
  std::map<int, Rational> coeffs;
  Sense sense = Sense::kLe;
  Rational rhs;
};

enum class ObjectiveSense { kMaximize, kMinimize };

class LPModel {
 public:
  int add_variable(std::string name, std::optional<Rational> lower = Rational(0),
                   std::optional<Rational> upper = std::nullopt) {
    if (index_.count(name)) throw DomainError("lp: variable '" + name + "' declared twice");
    if (lower && upper && *lower > *upper) throw DomainError("lp: empty bounds on '" + name + "'");
    const int k = static_cast<int>(vars_.size());
    index_.emplace(name, k);
    vars_.push_back(LPVariable{std::move(name), std::move(lower), std::move(upper)});
    return k;
  }

  int index_of(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw DomainError("lp: undeclared variable '" + name + "'");
    return it->second;
  }

  bool has_variable(const std::string& name) const { return index_.count(name) != 0; }

  /// Adds a row; zero coefficients are dropped.
  int add_row(std::string name, const std::map<int, Rational>& coeffs, Sense sense, Rational rhs) {
    LPRow row{std::move(name), {}, sense, std::move(rhs)};
    for (const auto& [k, c] : coeffs) {
      if (k < 0 || k >= num_variables()) throw DomainError("lp: row '" + row.name + "' references an undeclared variable");
      if (c != 0) row.coeffs.emplace(k, c);
    }
    rows_.push_back(std::move(row));
    return static_cast<int>(rows_.size()) - 1;
  }

  void set_objective(std::map<int, Rational> coeffs, ObjectiveSense sense) {
    objective_.clear();
    for (auto& [k, c] : coeffs) {
      if (k < 0 || k >= num_variables()) throw DomainError("lp: objective references an undeclared variable");
      if (c != 0) objective_.emplace(k, std::move(c));
    }
    objective_sense_ = sense;
  }

  int num_variables() const { return static_cast<int>(vars_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<LPVariable>& variables() const { return vars_; }
  const LPVariable& variable(int k) const { return vars_.at(static_cast<std::size_t>(k)); }
  LPVariable& variable(int k) { return vars_.at(static_cast<std::size_t>(k)); }
  const std::vector<LPRow>& rows() const { return rows_; }
  const std::map<int, Rational>& objective() const { return objective_; }
  ObjectiveSense objective_sense() const { return objective_sense_; }

 private:
  std::vector<LPVariable> vars_;
  std::unordered_map<std::string, int> index_;
  std::vector<LPRow> rows_;
  std::map<int, Rational> objective_;
  ObjectiveSense objective_sense_ = ObjectiveSense::kMaximize;
};

/// Variables z1..zn, d1..dm (lower bound 0, no upper bound) for models
/// stated over (z, delta).
inline LPModel zd_model(const Instance& inst) {
  LPModel model;
  for (int j = 0; j < inst.n(); ++j) model.add_variable("z" + std::to_string(j + 1), std::nullopt);
  for (int i = 0; i < inst.m(); ++i) model.add_variable("d" + std::to_string(i + 1), std::nullopt);
  return model;
}

/// Row coefficients of an inequality over the zd_model variable layout.
inline std::map<int, Rational> zd_coeffs(const Instance& inst, const Inequality& e) {
  std::map<int, Rational> out;
  for (const auto& [j, c] : e.alpha) out.emplace(j, c);
  for (const auto& [i, c] : e.beta) out.emplace(inst.n() + i, c);
  return out;
}

/// Adds an inequality; rows in a single variable tighten that variable's
/// bounds instead, which leaves the feasible set unchanged.
inline void add_inequality(LPModel& model, const Instance& inst, const Inequality& e, bool singletons_as_bounds) {
  std::map<int, Rational> coeffs = zd_coeffs(inst, e);
  if (singletons_as_bounds && coeffs.size() == 1) {
    const auto& [k, c] = *coeffs.begin();
    const Rational bound = e.gamma / c;
    const bool flip = c < 0;
    LPVariable& v = model.variable(k);
    auto tighten_upper = [&] { if (!v.upper || bound < *v.upper) v.upper = bound; };
    auto tighten_lower = [&] { if (!v.lower || bound > *v.lower) v.lower = bound; };
    switch (e.sense) {
      case Sense::kLe:
        flip ? tighten_lower() : tighten_upper();
        return;
      case Sense::kGe:
        flip ? tighten_upper() : tighten_lower();
        return;
      case Sense::kEq:
        tighten_lower();
        tighten_upper();
        return;
    }
  }
  model.add_row(e.tag, coeffs, e.sense, e.gamma);
}

}  // namespace cardcut
