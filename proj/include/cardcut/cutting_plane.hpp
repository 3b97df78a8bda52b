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

// Cutting-plane maximization over conv(X^{l,u}) for nested families: start
// from the reduced system, add the most violated separated row, repeat.

#pragma once

#include <string>
#include <vector>

#include "cardcut/certificate.hpp"
#include "cardcut/linearization.hpp"
#include "cardcut/lp_model.hpp"
#include "cardcut/separation.hpp"
#include "cardcut/simplex.hpp"

namespace cardcut {

struct CuttingPlaneResult {
  LPResult lp;
  std::vector<Inequality> cuts;
  int rounds = 0;
  bool certificate_ok = false;  // filled when verification was requested
  std::string certificate_reason;
};

inline json to_json(const CuttingPlaneResult& r) {
  json cuts = json::array();
  for (const Inequality& e : r.cuts) cuts.push_back(to_json(e));
  return json{{"status", to_string(r.lp.status)},
              {"value", to_string(r.lp.value)},
              {"rounds", r.rounds},
              {"cuts", cuts}};
}

/// Phase one of the reduced system runs once; every maximize() call starts
/// from a copy of that basis.
class CuttingPlaneSolver {
 public:
  explicit CuttingPlaneSolver(const Instance& inst, int max_rounds = 100000)
      : inst_(inst), model_(zd_model(inst)), max_rounds_(max_rounds), base_(build(inst_, model_)) {}

  CuttingPlaneResult maximize(const std::vector<Rational>& objective, bool verify = false) const {
    const int dims = inst_.n() + inst_.m();
    if (objective.size() != static_cast<std::size_t>(dims)) {
      throw ParseError("objective: expected " + std::to_string(dims) + " entries (z then delta)");
    }
    std::map<int, Rational> obj;
    for (int k = 0; k < dims; ++k) {
      if (objective[static_cast<std::size_t>(k)] != 0) obj.emplace(k, objective[static_cast<std::size_t>(k)]);
    }
    SimplexSolver lp = base_;
    LPModel model = model_;
    model.set_objective(obj, ObjectiveSense::kMaximize);
    CuttingPlaneResult out;
    out.lp = lp.solve(obj, ObjectiveSense::kMaximize);
    while (out.lp.status == LPStatus::kOptimal) {
      const SeparationResult sep = separate_all(inst_, point_of(out.lp));
      if (!sep.found) break;
      if (++out.rounds > max_rounds_) throw InternalError("cutting plane: round limit reached");
      const std::map<int, Rational> coeffs = zd_coeffs(inst_, *sep.inequality);
      lp.add_row(coeffs, sep.inequality->sense, sep.inequality->gamma);
      model.add_row(sep.inequality->tag, coeffs, sep.inequality->sense, sep.inequality->gamma);
      out.cuts.push_back(*sep.inequality);
      out.lp = lp.reoptimize();
    }
    if (verify) {
      const CertificateCheck chk = verify_certificate(model, out.lp);
      out.certificate_ok = chk.ok;
      out.certificate_reason = chk.reason;
    }
    return out;
  }

  const LPModel& base_model() const { return model_; }

 private:
  static SimplexSolver build(const Instance& inst, LPModel& model) {
    for (const Inequality& e : reduced_formulation(inst)) add_inequality(model, inst, e, true);
    return SimplexSolver(model);
  }

  Point point_of(const LPResult& r) const {
    Point p;
    p.z.assign(r.primal.begin(), r.primal.begin() + inst_.n());
    p.delta.assign(r.primal.begin() + inst_.n(), r.primal.end());
    return p;
  }

  Instance inst_;
  LPModel model_;
  int max_rounds_;
  SimplexSolver base_;
};

inline CuttingPlaneResult cutting_plane_maximize(const Instance& inst, const std::vector<Rational>& objective,
                                                 bool verify = false) {
  return CuttingPlaneSolver(inst).maximize(objective, verify);
}

}  // namespace cardcut
