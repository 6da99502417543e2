// Copyright 2026 The flg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "flg/cli/commands.hpp"

#include <cstdlib>

#include "flg/errors.hpp"

namespace flg::cli {
namespace {

Json selection_json(const Instance& instance, const Selection& selection) {
  Json facilities = Json::array();
  Json locations = Json::array();
  for (auto j : selection.facilities) {
    facilities.push_back(j + 1);
    locations.push_back(location_json(instance.candidates()[j]));
  }
  Json s;
  s["facilities"] = std::move(facilities);
  s["locations"] = std::move(locations);
  return s;
}

Json agents_json(const std::vector<std::size_t>& agents) {
  Json a = Json::array();
  for (auto i : agents) a.push_back(i + 1);
  return a;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) != nullptr) return kExitParse;
  if (dynamic_cast<const InvalidArgument*>(&e) != nullptr) return kExitParse;
  if (dynamic_cast<const GuardExceeded*>(&e) != nullptr) return kExitGuard;
  if (dynamic_cast<const MechanismMismatch*>(&e) != nullptr) return kExitMismatch;
  return kExitFailure;
}

std::uint64_t guard_from_environment() {
  const char* value = std::getenv("FLG_GUARD");
  if (value == nullptr || *value == '\0') return kDefaultGuard;
  char* end = nullptr;
  unsigned long long g = std::strtoull(value, &end, 10);
  if (*end != '\0' || g == 0) {
    throw ParseError(std::string("FLG_GUARD must be a positive integer, got \"") +
                     value + "\"");
  }
  return g;
}

Objective parse_objective(std::string_view name) {
  if (name == "sc") return Objective::kSocial;
  if (name == "mc") return Objective::kMaximum;
  throw ParseError("objective must be sc or mc");
}

Json outcome_json(const Instance& instance, const Outcome& outcome) {
  Json o;
  if (const auto* s = std::get_if<Selection>(&outcome)) {
    o["type"] = "deterministic";
    Json sel = selection_json(instance, *s);
    o["facilities"] = sel["facilities"];
    o["locations"] = sel["locations"];
    return o;
  }
  o["type"] = "randomized";
  Json dist = Json::array();
  for (const auto& [selection, p] : std::get<Lottery>(outcome).atoms()) {
    Json atom = selection_json(instance, selection);
    atom["probability"] = exact_json(p);
    dist.push_back(std::move(atom));
  }
  o["distribution"] = std::move(dist);
  return o;
}

Json ratio_json(const Ratio& ratio) {
  if (ratio.unbounded) {
    Json j;
    j["exact"] = "inf";
    j["decimal"] = "inf";
    return j;
  }
  return exact_json(ratio.value);
}

Json witness_json(const Instance& instance, const DeviationWitness& w) {
  Json j;
  j["coalition"] = agents_json(w.coalition);
  Json reports = Json::array();
  for (const auto& r : w.misreports) reports.push_back(location_json(r));
  j["misreports"] = std::move(reports);
  j["before"] = outcome_json(instance, w.before);
  j["after"] = outcome_json(instance, w.after);
  Json costs = Json::array();
  for (std::size_t t = 0; t < w.coalition.size(); ++t) {
    Json c;
    c["agent"] = w.coalition[t] + 1;
    c["truthful"] = exact_json(w.costs[t].first);
    c["deviating"] = exact_json(w.costs[t].second);
    costs.push_back(std::move(c));
  }
  j["costs"] = std::move(costs);
  return j;
}

Json cmd_solve(const Instance& instance, Objective objective,
               std::uint64_t guard) {
  OptResult opt = optimal(instance, objective, guard);
  Json out;
  out["objective"] = objective_name(objective);
  out["optimal_value"] = exact_json(opt.value);
  Json outcomes = Json::array();
  for (const auto& s : opt.argmins) outcomes.push_back(selection_json(instance, s));
  out["optimal_outcomes"] = std::move(outcomes);
  return out;
}

Json cmd_run(const Instance& instance, const MechanismSpec& mechanism,
             std::uint64_t guard) {
  RatioEvaluation sc = evaluate_ratio(instance, mechanism, Objective::kSocial, guard);
  RatioEvaluation mc = evaluate_ratio(instance, mechanism, Objective::kMaximum, guard);
  Json out;
  out["mechanism"] = mechanism_name(mechanism);
  out["outcome"] = outcome_json(instance, sc.outcome);
  out["cost_sc"] = exact_json(sc.mechanism_cost);
  out["cost_mc"] = exact_json(mc.mechanism_cost);
  out["optimal_sc"] = exact_json(sc.optimal_cost);
  out["optimal_mc"] = exact_json(mc.optimal_cost);
  out["ratio_sc"] = ratio_json(sc.ratio);
  out["ratio_mc"] = ratio_json(mc.ratio);
  return out;
}

Json cmd_verify(const Instance& instance, const MechanismSpec& mechanism,
                const VerifyOptions& options, std::uint64_t guard) {
  MisreportSet set = make_misreport_set(instance, options.grid_points);
  auto witness = find_group_deviation(instance, mechanism, set,
                                      options.group_max, guard);
  Json out;
  out["mechanism"] = mechanism_name(mechanism);
  if (witness) {
    out["result"] = "witness";
    out["witness"] = witness_json(instance, *witness);
  } else {
    out["result"] = "none";
  }
  Json searched;
  searched["reports"] = set.reports.size();
  searched["grid_points"] = instance.on_line() ? set.grid_points : 0;
  searched["max_coalition"] = options.group_max;
  searched["joint_reports"] = group_search_size(
      instance.num_agents(), set.reports.size(), options.group_max);
  out["searched"] = std::move(searched);
  if (options.anonymity) {
    auto perm = check_anonymity(instance, mechanism);
    if (perm) {
      out["anonymity"] = agents_json(*perm);
    } else {
      out["anonymity"] = "none";
    }
  }
  return out;
}

Json cmd_sweep(const RandomFamily& family, const MechanismSpec& mechanism,
               Objective objective, std::uint64_t count, std::ostream& csv,
               std::uint64_t guard) {
  RatioReport report = sweep(family, mechanism, objective, count, guard);
  csv << "index,n,m,k,mech_cost,opt_cost,ratio\n";
  for (const auto& row : report.rows) {
    csv << row.index << ',' << row.n << ',' << row.m << ',' << row.k << ','
        << to_rational_string(row.mechanism_cost) << ','
        << to_rational_string(row.optimal_cost) << ','
        << to_rational_string(row.ratio) << '\n';
  }
  csv << "max,,,,,,"
      << (report.max_ratio ? to_rational_string(*report.max_ratio) : "n/a")
      << '\n';

  Json out;
  out["mechanism"] = report.mechanism;
  out["objective"] = objective_name(objective);
  out["family"] = family_name(family.kind);
  out["n"] = family.n;
  out["m"] = family.m;
  out["k"] = family.k;
  out["seed"] = family.seed;
  out["count"] = report.count;
  if (report.max_ratio) {
    out["max_ratio"] = ratio_json(*report.max_ratio);
    out["argmax"] = *report.argmax;
  } else {
    out["max_ratio"] = "n/a";
  }
  Json histogram = Json::array();
  for (const auto& b : report.histogram) {
    Json h;
    h["bucket"] = b.label;
    h["count"] = b.count;
    histogram.push_back(std::move(h));
  }
  out["histogram"] = std::move(histogram);
  return out;
}

Json cmd_replay(LowerBoundConstruction construction,
                const MechanismSpec& mechanism, const Scalar& epsilon,
                const Scalar& far_point, std::uint64_t guard) {
  ReplayReport r =
      replay_lower_bound(construction, mechanism, epsilon, far_point, guard);
  Json out;
  out["construction"] = lower_bound_name(r.construction);
  out["mechanism"] = r.mechanism;
  out["epsilon"] = exact_json(r.epsilon);
  if (r.far_point) out["L"] = exact_json(*r.far_point);
  out["bound"] = exact_json(r.bound);

  Json truthful;
  truthful["instance"] = instance_to_json(r.truthful);
  truthful["outcome"] = outcome_json(r.truthful, r.truthful_outcome);
  truthful["optimal_mc"] = exact_json(r.truthful_optimum);
  truthful["ratio_mc"] = ratio_json(r.truthful_ratio);
  truthful["p_candidate_0"] = exact_json(r.left_probability);
  if (r.far_probability) {
    truthful["p_candidate_L"] = exact_json(*r.far_probability);
    truthful["residual_L"] = exact_json(1 - *r.far_probability);
  }
  out["I"] = std::move(truthful);

  Json deviated;
  deviated["instance"] = instance_to_json(r.deviated);
  deviated["outcome"] = outcome_json(r.deviated, r.deviated_outcome);
  deviated["optimal_mc"] = exact_json(r.deviated_optimum);
  deviated["ratio_mc"] = ratio_json(r.deviated_ratio);
  out["I_prime"] = std::move(deviated);

  Json manipulation;
  manipulation["agent"] = r.pivot_agent + 1;
  manipulation["misreport"] = to_rational_string(r.misreport);
  manipulation["cost_truthful"] = exact_json(r.truthful_cost);
  manipulation["cost_misreport"] = exact_json(r.deviated_cost);
  manipulation["margin"] = exact_json(r.margin);
  out["manipulation"] = std::move(manipulation);

  out["beats_bound"] = r.beats_bound;
  out["sp_violation"] = r.sp_violation;
  return out;
}

}  // namespace flg::cli
