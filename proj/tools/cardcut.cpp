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

// cardcut: command-line front end. One JSON document per line on stdout,
// diagnostics on stderr. Exit 0 ok, 1 bad input or domain error, 2 a
// verification failed, 64 usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cardcut.hpp"

namespace {

using namespace cardcut;

constexpr int kExitDomain = 1;
constexpr int kExitVerify = 2;
constexpr int kExitUsage = 64;

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Instance load_instance(const std::string& path) { return parse_instance(read_text(path)); }

// An argument that is either inline JSON or a path to a JSON file.
json json_argument(const std::string& arg, const std::string& what) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  const bool inline_doc = first != std::string::npos && (arg[first] == '{' || arg[first] == '[');
  const std::string text = inline_doc ? arg : read_text(arg);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": invalid JSON: " + e.what());
  }
}

// "1,2,3", "[1,2,3]", or "[]"; entries may be "p/q" rationals when wanted.
std::vector<std::string> split_list(std::string text) {
  for (char& c : text) {
    if (c == '[' || c == ']' || c == '"') c = ' ';
  }
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto a = item.find_first_not_of(' ');
    if (a == std::string::npos) continue;
    out.push_back(item.substr(a, item.find_last_not_of(' ') - a + 1));
  }
  return out;
}

std::vector<Rational> rational_list(const std::string& text, const std::string& field) {
  std::vector<Rational> out;
  for (const std::string& s : split_list(text)) {
    try {
      out.push_back(parse_rational(s));
    } catch (const ParseError&) {
      throw ParseError(field + ": not a rational '" + s + "'");
    }
  }
  return out;
}

std::vector<int> index_list(const std::string& text, const std::string& field, int limit) {
  std::vector<int> out;
  for (const std::string& s : split_list(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw ParseError(field + ": not an integer '" + s + "'");
    if (v < 1 || v > limit) throw ParseError(field + ": index " + s + " outside 1.." + std::to_string(limit));
    out.push_back(v - 1);
  }
  return out;
}

IndexSet subset_arg(const Instance& inst, const std::string& text) {
  IndexSet s(static_cast<std::size_t>(inst.n()));
  for (int j : index_list(text, "sprime", inst.n())) s.insert(j);
  return s;
}

int set_index(const Instance& inst, int one_based) {
  if (one_based < 1 || one_based > inst.m()) {
    throw ParseError("p: must lie in 1.." + std::to_string(inst.m()));
  }
  return one_based - 1;
}

std::vector<Rational> objective_arg(const Instance& inst, const std::string& text) {
  std::vector<Rational> c;
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] != '[' && text.find(',') == std::string::npos &&
      std::ifstream(text).good()) {
    c = rational_list_from_json(json_argument(text, "objective"), "objective");
  } else {
    c = rational_list(text, "objective");
  }
  if (c.size() != static_cast<std::size_t>(inst.n() + inst.m())) {
    throw ParseError("objective: expected " + std::to_string(inst.n() + inst.m()) + " entries (z then delta)");
  }
  return c;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json tagged(const Inequality& e) {
  json j = to_json(e);
  j["text"] = format(e);
  return j;
}

// --- subcommands ----------------------------------------------------------

int cmd_check_proper(const std::string& path) {
  emit(to_json(is_proper(load_instance(path))));
  return 0;
}

int cmd_delta(const std::string& path) {
  const auto patterns = compute_delta_set(load_instance(path));
  json list = json::array();
  for (const DeltaPattern& d : patterns) list.push_back(to_json(d));
  emit(json{{"count", patterns.size()}, {"patterns", list}});
  return 0;
}

int cmd_decompose(const std::string& path, const std::string& pattern) {
  const Instance inst = load_instance(path);
  if (pattern.empty()) {
    for (const DeltaPattern& d : compute_delta_set(inst)) emit(to_json(decompose(inst, d)));
    return 0;
  }
  std::vector<int> bits;
  for (const std::string& s : split_list(pattern)) {
    if (s != "0" && s != "1") throw ParseError("pattern: entries must be 0 or 1");
    bits.push_back(s == "1");
  }
  emit(to_json(decompose(inst, DeltaPattern::from_bits(bits))));
  return 0;
}

struct CutsArgs {
  std::string kind;
  std::string path;
  int p = 0;
  std::string sprime;
  std::string order;
  std::string family = "both";
  bool enumerate = false;
};

int cmd_cuts(const CutsArgs& a) {
  const Instance inst = load_instance(a.path);
  const bool want_upper = a.family != "lower";
  const bool want_lower = a.family != "upper";
  if (a.kind == "nested") {
    require_nested(inst, "cuts nested");
    if (a.enumerate) {
      require_guard(inst.n(), enumeration_guard(), "cut enumeration");
      for (int p = 0; p < inst.m(); ++p) {
        for (const IndexSet& s : [&] {
               std::vector<IndexSet> all;
               for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.n()); ++mask) {
                 all.push_back(IndexSet::from_mask(static_cast<std::size_t>(inst.n()), mask));
               }
               return all;
             }()) {
          if (want_upper && upper_applies(inst, p, s)) emit(tagged(mixing_upper(inst, p, s)));
          if (want_lower && lower_applies(inst, p, s)) emit(tagged(mixing_lower(inst, p, s)));
        }
      }
      return 0;
    }
    if (a.p == 0 && a.sprime.empty()) {
      for (const Inequality& e : reduced_formulation(inst)) emit(tagged(e));
      return 0;
    }
    if (a.p == 0 || a.sprime.empty()) throw ParseError("cuts nested: --p and --sprime go together");
    const int p = set_index(inst, a.p);
    const IndexSet s = subset_arg(inst, a.sprime);
    int printed = 0;
    if (want_upper && upper_applies(inst, p, s)) emit(tagged(mixing_upper(inst, p, s))), ++printed;
    if (want_lower && lower_applies(inst, p, s)) emit(tagged(mixing_lower(inst, p, s))), ++printed;
    if (printed == 0) {
      // let the generator name the failed precondition
      if (want_upper) mixing_upper(inst, p, s);
      mixing_lower(inst, p, s);
    }
    return 0;
  }
  if (a.order.empty() || a.sprime.empty()) throw ParseError("cuts general: --order and --sprime are required");
  const std::vector<int> order = index_list(a.order, "order", inst.m());
  const IndexSet s = subset_arg(inst, a.sprime);
  if (order.empty()) throw ParseError("order: empty");
  int printed = 0;
  if (want_upper && !lifted_upper_violation(inst, order, s)) emit(tagged(lifted_upper(inst, order, s))), ++printed;
  if (want_lower && !lifted_lower_violation(inst, order, s)) emit(tagged(lifted_lower(inst, order, s))), ++printed;
  if (printed == 0) {
    if (want_upper) lifted_upper(inst, order, s);
    lifted_lower(inst, order, s);
  }
  return 0;
}

int cmd_complete(const std::string& path, const std::string& alpha_text) {
  const Instance inst = load_instance(path);
  const std::vector<Rational> alpha = rational_list(alpha_text, "alpha");
  require_alpha_length(inst, alpha);
  const FamilyAnalysis fa = FamilyAnalysis::of(inst);
  json j = tagged(complete_inequality(inst, fa, alpha));
  j["nu"] = rational_list_to_json(nu(inst, fa, alpha));
  emit(j);
  return 0;
}

int cmd_separate(const std::string& path, const std::string& point_arg, const std::string& family) {
  const Instance inst = load_instance(path);
  const Point pt = point_from_json(json_argument(point_arg, "point"), inst);
  SeparationResult r;
  if (family == "upper") {
    r = separate_upper(inst, pt);
  } else if (family == "lower") {
    r = separate_lower(inst, pt);
  } else {
    r = separate_all(inst, pt);
  }
  emit(to_json(r));
  return 0;
}

int cmd_extform(const std::string& path, const std::string& objective, const std::string& output) {
  const Instance inst = load_instance(path);
  const ExtendedFormulation ef = build_extended_formulation(inst);
  std::map<int, Rational> obj;
  if (!objective.empty()) {
    const auto c = objective_arg(inst, objective);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] != 0) obj.emplace(static_cast<int>(k), c[k]);
    }
  }
  const std::string text = emit_lp(ef.model, obj, ObjectiveSense::kMaximize);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + output + "'");
    out << text;
    emit(json{{"written", output}, {"variables", ef.model.num_variables()}, {"rows", ef.model.num_rows()}});
  }
  return 0;
}

int cmd_solve(const std::string& path, const std::string& objective) {
  const Instance inst = load_instance(path);
  const auto c = objective_arg(inst, objective);
  if (is_nested(inst)) {
    const CuttingPlaneResult r = CuttingPlaneSolver(inst).maximize(c, true);
    json j = to_json(r);
    j["method"] = "cutting-plane";
    const auto dims = static_cast<std::size_t>(inst.n() + inst.m());
    std::vector<Rational> zd;
    if (r.lp.status == LPStatus::kOptimal) zd.assign(r.lp.primal.begin(), r.lp.primal.begin() + static_cast<long>(dims));
    j["primal"] = rational_list_to_json(zd);
    j["certificate_ok"] = r.certificate_ok;
    if (!r.certificate_ok) j["certificate_reason"] = r.certificate_reason;
    emit(j);
    return r.certificate_ok ? 0 : kExitVerify;
  }
  const ExtendedFormulation ef = build_extended_formulation(inst);
  std::map<int, Rational> obj;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) obj.emplace(static_cast<int>(k), c[k]);
  }
  LPModel model = ef.model;
  model.set_objective(obj, ObjectiveSense::kMaximize);
  const LPResult r = solve_lp(model);
  const CertificateCheck chk = verify_certificate(model, r);
  const int dims = inst.n() + inst.m();
  std::vector<Rational> zd;
  if (r.status == LPStatus::kOptimal) zd.assign(r.primal.begin(), r.primal.begin() + dims);
  emit(json{{"method", "extended-formulation"},
            {"status", to_string(r.status)},
            {"value", to_string(r.value)},
            {"primal", rational_list_to_json(zd)},
            {"certificate_ok", chk.ok}});
  return chk.ok ? 0 : kExitVerify;
}

struct VerifyArgs {
  std::string kind;
  std::string path;
  int trials = 100;
  std::uint64_t seed = 1;
  int p = 0;
  std::string sprime;
  std::string inequality;
};

Inequality inequality_from_json(const Instance& inst, const json& doc) {
  if (!doc.is_object()) throw ParseError("inequality: expected an object");
  Inequality e;
  auto read_map = [&](const char* field, int limit, bool z) {
    if (!doc.contains(field)) return;
    const json& m = doc.at(field);
    if (!m.is_object()) throw ParseError(std::string(field) + ": expected an object of index -> rational");
    for (const auto& [key, v] : m.items()) {
      const std::vector<int> k = index_list(key, field, limit);
      if (k.size() != 1) throw ParseError(std::string(field) + ": bad key '" + key + "'");
      const Rational c = rational_from_json(v, std::string(field) + "." + key);
      z ? e.add_z(k[0], c) : e.add_delta(k[0], c);
    }
  };
  read_map("alpha", inst.n(), true);
  read_map("beta", inst.m(), false);
  e.gamma = doc.contains("gamma") ? rational_from_json(doc.at("gamma"), "gamma") : Rational(0);
  const std::string sense = doc.value("sense", "<=");
  if (sense == "<=") {
    e.sense = Sense::kLe;
  } else if (sense == ">=") {
    e.sense = Sense::kGe;
  } else if (sense == "=") {
    e.sense = Sense::kEq;
  } else {
    throw ParseError("sense: expected <=, >= or =");
  }
  e.tag = doc.value("tag", "input");
  return e;
}

// Every generated inequality for the instance, for validity sweeps.
std::vector<Inequality> generated_rows(const Instance& inst) {
  std::vector<Inequality> out = standard_linearization(inst);
  const auto subsets = [&] {
    std::vector<IndexSet> all;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.n()); ++mask) {
      all.push_back(IndexSet::from_mask(static_cast<std::size_t>(inst.n()), mask));
    }
    return all;
  }();
  if (is_nested(inst)) {
    for (Inequality& e : reduced_formulation(inst)) out.push_back(std::move(e));
    for (int p = 0; p < inst.m(); ++p) {
      for (const IndexSet& s : subsets) {
        if (upper_applies(inst, p, s)) out.push_back(mixing_upper(inst, p, s));
        if (lower_applies(inst, p, s)) out.push_back(mixing_lower(inst, p, s));
      }
    }
    return out;
  }
  for (int a = 0; a < inst.m(); ++a) {
    for (int b = 0; b < inst.m(); ++b) {
      if (b == a) continue;
      for (const IndexSet& s : subsets) {
        const std::vector<int> order{a, b};
        if (!lifted_upper_violation(inst, order, s)) out.push_back(lifted_upper(inst, order, s));
        if (!lifted_lower_violation(inst, order, s)) out.push_back(lifted_lower(inst, order, s));
      }
    }
  }
  return out;
}

int verify_validity(const Instance& inst, const VerifyArgs& a) {
  std::vector<Inequality> rows;
  if (!a.inequality.empty()) {
    rows.push_back(inequality_from_json(inst, json_argument(a.inequality, "inequality")));
  } else {
    require_guard(inst.n(), kSeparationGuard + 4, "validity sweep");
    rows = generated_rows(inst);
  }
  int failures = 0;
  for (const Inequality& e : rows) {
    const ValidityReport r = brute_validity(inst, e);
    if (r.valid) continue;
    ++failures;
    emit(json{{"kind", "validity"}, {"valid", false}, {"inequality", tagged(e)}, {"witness", to_json(*r.witness)}});
  }
  emit(json{{"kind", "validity"}, {"checked", rows.size()}, {"failures", failures}, {"valid", failures == 0}});
  return failures == 0 ? 0 : kExitVerify;
}

int verify_separation(const Instance& inst, const VerifyArgs& a) {
  require_nested(inst, "verify separation");
  std::mt19937_64 rng(a.seed);
  std::uniform_int_distribution<int> den_dist(1, 6);
  auto entry = [&] {
    const int den = den_dist(rng);
    Rational v(std::uniform_int_distribution<int>(0, den)(rng), den);
    v.canonicalize();
    return v;
  };
  int mismatches = 0;
  int cuts = 0;
  for (int t = 0; t < a.trials; ++t) {
    Point pt;
    for (int j = 0; j < inst.n(); ++j) pt.z.push_back(entry());
    for (int i = 0; i < inst.m(); ++i) pt.delta.push_back(entry());
    const SeparationResult gu = separate_upper(inst, pt);
    const SeparationResult bu = brute_separation_upper(inst, pt);
    const SeparationResult gl = separate_lower(inst, pt);
    const SeparationResult bl = brute_separation_lower(inst, pt);
    cuts += gu.found + gl.found;
    if (gu.violation != bu.violation || gl.violation != bl.violation) {
      ++mismatches;
      emit(json{{"kind", "separation"},
                {"point", to_json(pt)},
                {"greedy_upper", to_string(gu.violation)},
                {"brute_upper", to_string(bu.violation)},
                {"greedy_lower", to_string(gl.violation)},
                {"brute_lower", to_string(bl.violation)}});
    }
  }
  emit(json{{"kind", "separation"}, {"seed", a.seed}, {"trials", a.trials}, {"cuts", cuts}, {"mismatches", mismatches}});
  return mismatches == 0 ? 0 : kExitVerify;
}

int verify_dimension(const Instance& inst) {
  const int d = dimension(inst);
  const bool assumptions = !nested_hull_assumption_failure(inst).has_value();
  const bool ok = !assumptions || d == inst.n() + inst.m();
  emit(json{{"kind", "dimension"}, {"dimension", d}, {"full", inst.n() + inst.m()}, {"assumptions_hold", assumptions}, {"ok", ok}});
  return ok ? 0 : kExitVerify;
}

int verify_facet(const Instance& inst, const VerifyArgs& a) {
  require_nested(inst, "verify facet");
  const int full = inst.n() + inst.m() - 1;
  int bad = 0;
  auto check = [&](const FacetVerdict& v, const Inequality& e) {
    const int rank = facet_rank(inst, e);
    bool ok = true;
    if (v.classification == FacetClass::kFacetBySufficiency) ok = rank == full;
    if (v.boundary_facet) ok = *v.boundary_facet == (rank == full);
    json j = to_json(v);
    j["inequality"] = tagged(e);
    j["facet_rank"] = rank;
    j["consistent"] = ok;
    emit(j);
    if (!ok) ++bad;
  };
  if (a.p != 0 || !a.sprime.empty()) {
    if (a.p == 0 || a.sprime.empty()) throw ParseError("verify facet: --p and --sprime go together");
    const int p = set_index(inst, a.p);
    const IndexSet s = subset_arg(inst, a.sprime);
    bool any = false;
    if (upper_applies(inst, p, s)) check(facet_check_upper(inst, p, s), mixing_upper(inst, p, s)), any = true;
    if (lower_applies(inst, p, s)) check(facet_check_lower(inst, p, s), mixing_lower(inst, p, s)), any = true;
    if (!any) mixing_upper(inst, p, s);
  } else {
    require_guard(inst.n(), kSeparationGuard, "facet sweep");
    for (int p = 0; p < inst.m(); ++p) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.n()); ++mask) {
        const IndexSet s = IndexSet::from_mask(static_cast<std::size_t>(inst.n()), mask);
        if (upper_applies(inst, p, s)) check(facet_check_upper(inst, p, s), mixing_upper(inst, p, s));
        if (lower_applies(inst, p, s)) check(facet_check_lower(inst, p, s), mixing_lower(inst, p, s));
      }
    }
  }
  emit(json{{"kind", "facet"}, {"inconsistent", bad}});
  return bad == 0 ? 0 : kExitVerify;
}

int verify_completeness(const Instance& inst, const VerifyArgs& a) {
  const CompletenessReport r = completeness_check(inst, a.trials, a.seed);
  json j = to_json(r);
  j["kind"] = "completeness";
  emit(j);
  return r.discrepancies.empty() ? 0 : kExitVerify;
}

int cmd_verify(const VerifyArgs& a) {
  const Instance inst = load_instance(a.path);
  if (a.kind == "validity") return verify_validity(inst, a);
  if (a.kind == "separation") return verify_separation(inst, a);
  if (a.kind == "dimension") return verify_dimension(inst);
  if (a.kind == "facet") return verify_facet(inst, a);
  return verify_completeness(inst, a);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cutting planes and exact checks for cardinality-constrained multilinear sets"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string path;
  std::string pattern;
  std::string alpha;
  std::string point;
  std::string objective;
  std::string output;
  std::string sep_family = "all";
  CutsArgs cuts;
  VerifyArgs verify;
  int code = 0;

  auto* proper = app.add_subcommand("check-proper", "Closure, pattern count and affine rank");
  proper->add_option("instance", path, "Instance JSON file ('-' for stdin)")->required();

  auto* delta = app.add_subcommand("delta", "Realizable delta patterns in canonical order");
  delta->add_option("instance", path)->required();

  auto* dec = app.add_subcommand("decompose", "Fiber decomposition of one pattern (all patterns by default)");
  dec->add_option("instance", path)->required();
  dec->add_option("--pattern", pattern, "0/1 list, e.g. 1,0");

  auto* cut = app.add_subcommand("cuts", "Generate inequalities");
  cut->add_option("kind", cuts.kind, "nested or general")->required()->check(CLI::IsMember({"nested", "general"}));
  cut->add_option("instance", cuts.path)->required();
  cut->add_option("--p", cuts.p, "Set index (1-based)");
  cut->add_option("--sprime", cuts.sprime, "Subset S', e.g. 1,2,4,5");
  cut->add_option("--order", cuts.order, "Lifting order, e.g. [1,2]");
  cut->add_option("--family", cuts.family, "upper, lower or both")->check(CLI::IsMember({"upper", "lower", "both"}));
  cut->add_flag("--enumerate", cuts.enumerate, "Every applicable mixing inequality");

  auto* comp = app.add_subcommand("complete", "Complete an objective vector to a valid inequality");
  comp->add_option("instance", path)->required();
  comp->add_option("--alpha", alpha, "z coefficients, e.g. 1,1,0,1/2,0")->required();

  auto* sep = app.add_subcommand("separate", "Most violated inequality at a point");
  sep->add_option("instance", path)->required();
  sep->add_option("--point", point, "Point JSON {\"z\":[..],\"delta\":[..]} or a file holding it")->required();
  sep->add_option("--family", sep_family, "all, upper or lower")->check(CLI::IsMember({"all", "upper", "lower"}));

  auto* ext = app.add_subcommand("extform", "Extended formulation as CPLEX LP text");
  ext->add_option("instance", path)->required();
  ext->add_option("--objective", objective, "Maximized objective over (z, delta), list or JSON file");
  ext->add_option("--output", output, "Write the LP text to a file instead of stdout");

  auto* solve = app.add_subcommand("solve", "Maximize a linear objective over the hull");
  solve->add_option("instance", path)->required();
  solve->add_option("--objective", objective, "Objective over (z, delta), list or JSON file")->required();

  auto* ver = app.add_subcommand("verify", "Exhaustive checks against enumeration");
  ver->add_option("kind", verify.kind, "validity, separation, dimension, facet or completeness")
      ->required()
      ->check(CLI::IsMember({"validity", "separation", "dimension", "facet", "completeness"}));
  ver->add_option("instance", verify.path)->required();
  ver->add_option("--trials", verify.trials, "Random trials")->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", verify.seed, "Random seed");
  ver->add_option("--p", verify.p, "Set index for facet checks (1-based)");
  ver->add_option("--sprime", verify.sprime, "Subset S' for facet checks");
  ver->add_option("--inequality", verify.inequality, "Inequality JSON (or file) for validity checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (proper->parsed()) code = cmd_check_proper(path);
    if (delta->parsed()) code = cmd_delta(path);
    if (dec->parsed()) code = cmd_decompose(path, pattern);
    if (cut->parsed()) code = cmd_cuts(cuts);
    if (comp->parsed()) code = cmd_complete(path, alpha);
    if (sep->parsed()) code = cmd_separate(path, point, sep_family);
    if (ext->parsed()) code = cmd_extform(path, objective, output);
    if (solve->parsed()) code = cmd_solve(path, objective);
    if (ver->parsed()) code = cmd_verify(verify);
  } catch (const cardcut::Error& e) {
    std::cerr << "cardcut: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "cardcut: unexpected error: " << e.what() << "\n";
    return kExitDomain;
  }
  std::cout.flush();
  return code;
}
