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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "flg/cli/commands.hpp"
#include "flg/errors.hpp"

namespace {

using namespace flg;
using namespace flg::cli;

void print(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Facility location games with candidate locations"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string objective = "mc";
  std::string mechanism;

  auto* solve = app.add_subcommand("solve", "Exact optimum of an instance file");
  solve->add_option("instance", instance_path, "Instance JSON file")->required();
  solve->add_option("--objective", objective, "sc or mc");

  auto* run = app.add_subcommand("run", "Apply a mechanism to an instance file");
  run->add_option("instance", instance_path, "Instance JSON file")->required();
  run->add_option("--mechanism", mechanism, "Mechanism name")->required();

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Search for SP/GSP violations");
  verify->add_option("instance", instance_path, "Instance JSON file")->required();
  verify->add_option("--mechanism", mechanism, "Mechanism name")->required();
  verify->add_option("--group-max", verify_options.group_max,
                     "Largest coalition searched (1 = unilateral)");
  verify->add_option("--grid", verify_options.grid_points,
                     "Grid points added to the misreport set");
  verify->add_flag("--anonymity", verify_options.anonymity,
                   "Also check all agent permutations");

  std::string family = "line";
  RandomFamily fam;
  int k = 0;
  std::string lo = "0", hi = "10";
  std::uint64_t count = 1000;
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "Ratio sweep over a random family");
  sweep->add_option("--family", family, "line or metric");
  sweep->add_option("--n", fam.n, "Agents per instance");
  sweep->add_option("--m", fam.m, "Candidates per instance");
  sweep->add_option("--k", k, "Facilities (default: the mechanism's)");
  sweep->add_option("--seed", fam.seed, "Random seed");
  sweep->add_option("--lo", lo, "Lower end of the value range");
  sweep->add_option("--hi", hi, "Upper end of the value range");
  sweep->add_option("--grid-denominator", fam.grid_denominator,
                    "Values are multiples of 1/denominator");
  sweep->add_option("--mechanism", mechanism, "Mechanism name")->required();
  sweep->add_option("--objective", objective, "sc or mc");
  sweep->add_option("--count", count, "Number of instances");
  sweep->add_option("--out", out_path, "CSV output path (default stdout)");

  std::string construction;
  std::string epsilon = "1/10";
  std::string far_point = std::to_string(kDefaultFarPoint);
  auto* replay = app.add_subcommand("replay", "Replay a lower-bound construction");
  replay->add_option("--construction", construction,
                     "single-deterministic, single-randomized, "
                     "two-deterministic or two-randomized")
      ->required();
  replay->add_option("--mechanism", mechanism, "Mechanism name")->required();
  replay->add_option("--epsilon", epsilon, "Epsilon (decimal or p/q)");
  replay->add_option("--L", far_point, "Far point for two-facility constructions");

  std::uint64_t index = 0;
  auto* sample = app.add_subcommand("sample", "Print one instance of a random family");
  sample->add_option("--family", family, "line or metric");
  sample->add_option("--n", fam.n, "Agents");
  sample->add_option("--m", fam.m, "Candidates");
  sample->add_option("--k", k, "Facilities (default 1)");
  sample->add_option("--seed", fam.seed, "Random seed");
  sample->add_option("--index", index, "Instance index within the family");
  sample->add_option("--lo", lo, "Lower end of the value range");
  sample->add_option("--hi", hi, "Upper end of the value range");
  sample->add_option("--grid-denominator", fam.grid_denominator,
                     "Values are multiples of 1/denominator");

  int n = 4;
  auto* instance = app.add_subcommand("instance", "Print a named construction");
  instance->add_option("--construction", construction,
                       "single-lb-I, single-lb-I', two-lb-I, two-lb-I', "
                       "wpv-remark, example-1 or median-context")
      ->required();
  instance->add_option("--epsilon", epsilon, "Epsilon (decimal or p/q)");
  instance->add_option("--L", far_point, "Far point for two-facility constructions");
  instance->add_option("--n", n, "Agent count (example-1, median-context)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    const std::uint64_t guard = guard_from_environment();
    if (solve->parsed()) {
      print(cmd_solve(load_instance(instance_path), parse_objective(objective),
                      guard));
    } else if (run->parsed()) {
      print(cmd_run(load_instance(instance_path), parse_mechanism(mechanism),
                    guard));
    } else if (verify->parsed()) {
      print(cmd_verify(load_instance(instance_path), parse_mechanism(mechanism),
                       verify_options, guard));
    } else if (sweep->parsed()) {
      MechanismSpec spec = parse_mechanism(mechanism);
      fam.kind = parse_family(family);
      fam.k = k > 0 ? k : facility_count(spec);
      fam.lo = parse_scalar(lo);
      fam.hi = parse_scalar(hi);
      const Objective obj = parse_objective(objective);
      if (out_path.empty()) {
        cmd_sweep(fam, spec, obj, count, std::cout, guard);
      } else {
        std::ofstream csv(out_path);
        if (!csv) throw Error("cannot write " + out_path);
        print(cmd_sweep(fam, spec, obj, count, csv, guard));
      }
    } else if (replay->parsed()) {
      print(cmd_replay(parse_lower_bound(construction),
                       parse_mechanism(mechanism), parse_scalar(epsilon),
                       parse_scalar(far_point), guard));
    } else if (sample->parsed()) {
      fam.kind = parse_family(family);
      fam.k = k > 0 ? k : 1;
      fam.lo = parse_scalar(lo);
      fam.hi = parse_scalar(hi);
      std::cout << serialize_instance(random_instance(fam, index));
    } else if (instance->parsed()) {
      PaperConstruction pc;
      pc.kind = parse_construction(construction);
      pc.epsilon = parse_scalar(epsilon);
      pc.far_point = parse_scalar(far_point);
      pc.n = n;
      std::cout << serialize_instance(build_paper_instance(pc));
    }
  } catch (const std::exception& e) {
    std::cerr << "flg: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitOk;
}
