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

// Exact dense-tableau simplex over rationals. Two primal phases with Bland's
// rule; rows added after an optimum are absorbed by a dual simplex that uses
// the smallest-subscript rule, starting from the previous optimal basis.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cardcut/lp_model.hpp"

namespace cardcut {

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

inline std::string to_string(LPStatus s) {
  switch (s) {
    case LPStatus::kOptimal:
      return "optimal";
    case LPStatus::kInfeasible:
      return "infeasible";
    case LPStatus::kUnbounded:
      return "unbounded";
  }
  return "?";
}

/// Optimum with its certificate. `dual` holds one multiplier per row in
/// model order followed by rows added later; signs follow the convention for
/// maximizing (objective sense applied): >= 0 on <= rows, <= 0 on >= rows.
struct LPResult {
  LPStatus status = LPStatus::kInfeasible;
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  std::vector<int> basis;  // basic standard-form columns, one per tableau row
  int iterations = 0;
};

class SimplexSolver {
 public:
  explicit SimplexSolver(const LPModel& model) : num_model_vars_(model.num_variables()) {
    build(model);
    phase_one();
  }

  bool feasible() const { return feasible_; }

  /// Optimizes a new objective from the current basis.
  LPResult solve(const std::map<int, Rational>& objective, ObjectiveSense sense) {
    objective_ = objective;
    sense_ = sense;
    if (!feasible_) return infeasible_result();
    load_costs();
    const LPStatus st = primal_loop();
    return result(st);
  }

  LPResult solve(const LPModel& model) { return solve(model.objective(), model.objective_sense()); }

  /// Appends a <= or >= row in model variables; equalities become two rows.
  /// Call reoptimize() afterwards.
  void add_row(const std::map<int, Rational>& coeffs, Sense sense, const Rational& rhs) {
    const int origin = next_origin_++;
    if (sense == Sense::kEq) {
      append_row(coeffs, Sense::kLe, rhs, origin);
      append_row(coeffs, Sense::kGe, rhs, origin);
    } else {
      append_row(coeffs, sense, rhs, origin);
    }
  }

  /// Restores primal feasibility after add_row calls (dual simplex), keeping
  /// the current objective.
  LPResult reoptimize() {
    if (!feasible_) return infeasible_result();
    const LPStatus st = dual_loop();
    if (st != LPStatus::kOptimal) {
      feasible_ = false;
      return infeasible_result();
    }
    return result(primal_loop());
  }

  int rows() const { return static_cast<int>(tab_.size()); }
  int columns() const { return num_cols_; }

 private:
  enum class Map { kShift, kMirror, kSplit };
  struct VarMap {
    Map kind = Map::kShift;
    int col = 0;
    int col2 = -1;
    Rational offset;
  };
  struct RowOrigin {
    int index;  // model row, later rows continue the numbering; -1 for bound rows
    int sign;   // standard row = sign * model row as written
  };

  void append_row(const std::map<int, Rational>& coeffs, Sense sense, const Rational& rhs, int origin) {
    const int sign = sense == Sense::kGe ? -1 : 1;
    std::vector<Rational> row(static_cast<std::size_t>(num_cols_));
    Rational b = sign * rhs;
    transform(coeffs, sign, row, b);
    for (std::size_t r = 0; r < tab_.size(); ++r) {
      const Rational f = row[static_cast<std::size_t>(basis_[r])];
      if (f == 0) continue;
      axpy(row, -f, tab_[r]);
      b -= f * rhs_[r];
    }
    const int slack = new_column(0, false);
    row.resize(static_cast<std::size_t>(num_cols_));
    row[static_cast<std::size_t>(slack)] = 1;
    tab_.push_back(std::move(row));
    rhs_.push_back(std::move(b));
    basis_.push_back(slack);
    marker_.push_back(slack);
    origin_.push_back(RowOrigin{origin, sign});
  }

  void build(const LPModel& model) {
    for (const LPVariable& v : model.variables()) {
      VarMap vm;
      if (v.lower) {
        vm.kind = Map::kShift;
        vm.offset = *v.lower;
        vm.col = new_column(0, false);
      } else if (v.upper) {
        vm.kind = Map::kMirror;
        vm.offset = *v.upper;
        vm.col = new_column(0, false);
      } else {
        vm.kind = Map::kSplit;
        vm.col = new_column(0, false);
        vm.col2 = new_column(0, false);
      }
      vars_.push_back(vm);
    }
    struct Pending {
      std::map<int, Rational> coeffs;
      Sense sense;
      Rational rhs;
      int origin;
    };
    std::vector<Pending> pending;
    for (int k = 0; k < model.num_rows(); ++k) {
      const LPRow& r = model.rows()[static_cast<std::size_t>(k)];
      pending.push_back(Pending{r.coeffs, r.sense, r.rhs, k});
    }
    next_origin_ = model.num_rows();
    for (int k = 0; k < model.num_variables(); ++k) {
      const LPVariable& v = model.variable(k);
      if (v.lower && v.upper) pending.push_back(Pending{{{k, Rational(1)}}, Sense::kLe, *v.upper, -1});
    }
    const int structural = num_cols_;
    std::vector<std::vector<Rational>> rows;
    std::vector<Sense> senses;
    for (Pending& p : pending) {
      std::vector<Rational> row(static_cast<std::size_t>(structural));
      Rational b = p.rhs;
      transform(p.coeffs, 1, row, b);
      int sign = 1;
      Sense s = p.sense;
      if (b < 0) {
        sign = -1;
        for (Rational& x : row) x = -x;
        b = -b;
        if (s == Sense::kLe) {
          s = Sense::kGe;
        } else if (s == Sense::kGe) {
          s = Sense::kLe;
        }
      }
      rows.push_back(std::move(row));
      senses.push_back(s);
      rhs_.push_back(std::move(b));
      origin_.push_back(RowOrigin{p.origin, sign});
    }
    const std::size_t nrows = rows.size();
    tab_.assign(nrows, {});
    basis_.assign(nrows, -1);
    marker_.assign(nrows, -1);
    std::vector<std::pair<std::size_t, int>> entries;  // (row, column) = +-1
    for (std::size_t r = 0; r < nrows; ++r) {
      if (senses[r] == Sense::kLe) {
        const int c = new_column(0, false);
        entries.emplace_back(r, c);
        basis_[r] = marker_[r] = c;
      } else {
        if (senses[r] == Sense::kGe) {
          const int c = new_column(0, false);
          entries.emplace_back(r, -c - 1);
        }
        const int a = new_column(1, true);
        entries.emplace_back(r, a);
        basis_[r] = marker_[r] = a;
      }
    }
    for (std::size_t r = 0; r < nrows; ++r) {
      rows[r].resize(static_cast<std::size_t>(num_cols_));
      tab_[r] = std::move(rows[r]);
    }
    for (const auto& [r, c] : entries) {
      if (c >= 0) {
        tab_[r][static_cast<std::size_t>(c)] = 1;
      } else {
        tab_[r][static_cast<std::size_t>(-c - 1)] = -1;
      }
    }
  }

  void transform(const std::map<int, Rational>& coeffs, int sign, std::vector<Rational>& row, Rational& b) const {
    for (const auto& [k, c0] : coeffs) {
      const Rational c = sign * c0;
      const VarMap& vm = vars_[static_cast<std::size_t>(k)];
      switch (vm.kind) {
        case Map::kShift:
          row[static_cast<std::size_t>(vm.col)] += c;
          b -= c * vm.offset;
          break;
        case Map::kMirror:
          row[static_cast<std::size_t>(vm.col)] -= c;
          b -= c * vm.offset;
          break;
        case Map::kSplit:
          row[static_cast<std::size_t>(vm.col)] += c;
          row[static_cast<std::size_t>(vm.col2)] -= c;
          break;
      }
    }
  }

  int new_column(int phase_one_cost, bool artificial) {
    const int c = num_cols_++;
    barred_.push_back(artificial);
    cost1_.push_back(phase_one_cost);
    for (auto& row : tab_) row.emplace_back(0);
    d_.emplace_back(0);
    return c;
  }

  static void axpy(std::vector<Rational>& dst, const Rational& f, const std::vector<Rational>& src) {
    Rational t;
    for (std::size_t c = 0; c < src.size(); ++c) {
      if (sgn(src[c]) == 0) continue;
      t = f * src[c];
      dst[c] += t;
    }
  }

  void pivot(std::size_t r, int col) {
    const auto j = static_cast<std::size_t>(col);
    std::vector<Rational>& prow = tab_[r];
    if (prow[j] != 1) {
      const Rational inv = 1 / prow[j];
      for (Rational& x : prow) {
        if (sgn(x) != 0) x *= inv;
      }
      rhs_[r] *= inv;
    }
    prow[j] = 1;
    nz_.clear();
    for (std::size_t c = 0; c < prow.size(); ++c) {
      if (sgn(prow[c]) != 0) nz_.push_back(c);
    }
    Rational t;
    auto eliminate = [&](std::vector<Rational>& row, Rational* rhs) {
      if (sgn(row[j]) == 0) return;
      const Rational f = row[j];
      for (std::size_t c : nz_) {
        t = f * prow[c];
        row[c] -= t;
      }
      row[j] = 0;
      if (rhs != nullptr) {
        t = f * rhs_[r];
        *rhs -= t;
      }
    };
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (i != r) eliminate(tab_[i], &rhs_[i]);
    }
    eliminate(d_, nullptr);
    basis_[r] = col;
    ++iterations_;
  }

  void reduced_costs(const std::vector<Rational>& cost) {
    d_ = cost;
    for (std::size_t r = 0; r < tab_.size(); ++r) {
      const Rational& cb = cost[static_cast<std::size_t>(basis_[r])];
      if (sgn(cb) == 0) continue;
      axpy(d_, -cb, tab_[r]);
    }
  }

  LPStatus primal_loop() {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < num_cols_; ++c) {
        if (!barred_[static_cast<std::size_t>(c)] && sgn(d_[static_cast<std::size_t>(c)]) < 0) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return LPStatus::kOptimal;
      const auto j = static_cast<std::size_t>(enter);
      std::optional<std::size_t> leave;
      Rational best;
      Rational ratio;
      for (std::size_t r = 0; r < tab_.size(); ++r) {
        if (sgn(tab_[r][j]) <= 0) continue;
        ratio = rhs_[r] / tab_[r][j];
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return LPStatus::kUnbounded;
      pivot(*leave, enter);
    }
  }

  LPStatus dual_loop() {
    for (;;) {
      std::optional<std::size_t> leave;
      for (std::size_t r = 0; r < tab_.size(); ++r) {
        if (sgn(rhs_[r]) < 0 && (!leave || basis_[r] < basis_[*leave])) leave = r;
      }
      if (!leave) return LPStatus::kOptimal;
      const std::vector<Rational>& row = tab_[*leave];
      int enter = -1;
      Rational best;
      Rational ratio;
      for (int c = 0; c < num_cols_; ++c) {
        const auto j = static_cast<std::size_t>(c);
        if (barred_[j] || sgn(row[j]) >= 0) continue;
        ratio = -d_[j] / row[j];
        if (enter < 0 || ratio < best) {
          enter = c;
          best = ratio;
        }
      }
      if (enter < 0) return LPStatus::kInfeasible;
      pivot(*leave, enter);
    }
  }

  void phase_one() {
    std::vector<Rational> cost(static_cast<std::size_t>(num_cols_));
    for (int c = 0; c < num_cols_; ++c) cost[static_cast<std::size_t>(c)] = cost1_[static_cast<std::size_t>(c)];
    reduced_costs(cost);
    primal_loop();
    for (std::size_t r = 0; r < tab_.size(); ++r) {
      if (barred_[static_cast<std::size_t>(basis_[r])] && sgn(rhs_[r]) != 0) {
        feasible_ = false;
        return;
      }
    }
    feasible_ = true;
    // Drive zero-level artificials out where a structural column allows it.
    for (std::size_t r = 0; r < tab_.size(); ++r) {
      if (!barred_[static_cast<std::size_t>(basis_[r])]) continue;
      for (int c = 0; c < num_cols_; ++c) {
        if (!barred_[static_cast<std::size_t>(c)] && sgn(tab_[r][static_cast<std::size_t>(c)]) != 0) {
          pivot(r, c);
          break;
        }
      }
    }
  }

  // Internal problem is a minimization of w, w = -c when maximizing c.
  std::vector<Rational> internal_costs() const {
    std::vector<Rational> cost(static_cast<std::size_t>(num_cols_));
    const int s = sense_ == ObjectiveSense::kMaximize ? -1 : 1;
    for (const auto& [k, c] : objective_) {
      const VarMap& vm = vars_[static_cast<std::size_t>(k)];
      const Rational w = s * c;
      switch (vm.kind) {
        case Map::kShift:
          cost[static_cast<std::size_t>(vm.col)] += w;
          break;
        case Map::kMirror:
          cost[static_cast<std::size_t>(vm.col)] -= w;
          break;
        case Map::kSplit:
          cost[static_cast<std::size_t>(vm.col)] += w;
          cost[static_cast<std::size_t>(vm.col2)] -= w;
          break;
      }
    }
    return cost;
  }

  void load_costs() { reduced_costs(internal_costs()); }

  LPResult infeasible_result() const {
    LPResult out;
    out.status = LPStatus::kInfeasible;
    out.iterations = iterations_;
    return out;
  }

  LPResult result(LPStatus st) const {
    LPResult out;
    out.status = st;
    out.iterations = iterations_;
    out.basis = basis_;
    if (st != LPStatus::kOptimal) return out;
    std::vector<Rational> x(static_cast<std::size_t>(num_cols_));
    for (std::size_t r = 0; r < tab_.size(); ++r) x[static_cast<std::size_t>(basis_[r])] = rhs_[r];
    out.primal.resize(static_cast<std::size_t>(num_model_vars_));
    for (int k = 0; k < num_model_vars_; ++k) {
      const VarMap& vm = vars_[static_cast<std::size_t>(k)];
      const Rational& a = x[static_cast<std::size_t>(vm.col)];
      Rational& v = out.primal[static_cast<std::size_t>(k)];
      switch (vm.kind) {
        case Map::kShift:
          v = vm.offset + a;
          break;
        case Map::kMirror:
          v = vm.offset - a;
          break;
        case Map::kSplit:
          v = a - x[static_cast<std::size_t>(vm.col2)];
          break;
      }
    }
    out.value = 0;
    for (const auto& [k, c] : objective_) out.value += c * out.primal[static_cast<std::size_t>(k)];
    // y' = -d at each row's unit column, then undo the row sign and the
    // min/max flip.
    out.dual.assign(static_cast<std::size_t>(next_origin_), Rational(0));
    for (std::size_t r = 0; r < tab_.size(); ++r) {
      const RowOrigin& o = origin_[r];
      if (o.index < 0) continue;
      const Rational y_std = -d_[static_cast<std::size_t>(marker_[r])];
      out.dual[static_cast<std::size_t>(o.index)] -= o.sign * y_std;
    }
    return out;
  }

  int num_model_vars_ = 0;
  int num_cols_ = 0;
  std::vector<VarMap> vars_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  std::vector<int> marker_;
  std::vector<RowOrigin> origin_;
  std::vector<bool> barred_;
  std::vector<int> cost1_;
  std::vector<Rational> d_;
  std::vector<std::size_t> nz_;
  std::map<int, Rational> objective_;
  ObjectiveSense sense_ = ObjectiveSense::kMaximize;
  int next_origin_ = 0;
  int iterations_ = 0;
  bool feasible_ = false;
};

inline LPResult solve_lp(const LPModel& model) {
  SimplexSolver solver(model);
  return solver.solve(model);
}

inline LPResult solve_lp(const LPModel& model, const std::map<int, Rational>& objective, ObjectiveSense sense) {
  SimplexSolver solver(model);
  return solver.solve(objective, sense);
}

}  // namespace cardcut
