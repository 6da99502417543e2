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

#ifndef FLG_CLI_COMMANDS_HPP
#define FLG_CLI_COMMANDS_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "flg/cli/instance_io.hpp"
#include "flg/instances.hpp"
#include "flg/mechanisms.hpp"
#include "flg/solver.hpp"
#include "flg/verify.hpp"

namespace flg::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitGuard = 3,
  kExitMismatch = 4,
};

// Maps the library's exception types onto exit codes.
int exit_code_for(const std::exception& e);

// FLG_GUARD overrides kDefaultGuard when set to a positive integer.
std::uint64_t guard_from_environment();

Objective parse_objective(std::string_view name);

Json cmd_solve(const Instance& instance, Objective objective,
               std::uint64_t guard);

Json cmd_run(const Instance& instance, const MechanismSpec& mechanism,
             std::uint64_t guard);

struct VerifyOptions {
  int group_max = 1;
  int grid_points = kDefaultGridPoints;
  bool anonymity = false;
};

Json cmd_verify(const Instance& instance, const MechanismSpec& mechanism,
                const VerifyOptions& options, std::uint64_t guard);

// Writes the per-instance CSV to `csv` and returns the JSON summary.
Json cmd_sweep(const RandomFamily& family, const MechanismSpec& mechanism,
               Objective objective, std::uint64_t count, std::ostream& csv,
               std::uint64_t guard);

Json cmd_replay(LowerBoundConstruction construction,
                const MechanismSpec& mechanism, const Scalar& epsilon,
                const Scalar& far_point, std::uint64_t guard);

Json outcome_json(const Instance& instance, const Outcome& outcome);
Json ratio_json(const Ratio& ratio);
Json witness_json(const Instance& instance, const DeviationWitness& witness);

}  // namespace flg::cli

#endif  // FLG_CLI_COMMANDS_HPP
