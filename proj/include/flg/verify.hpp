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

// Falsification engine: deviation search, anonymity checks, ratio sweeps
// and replay of the lower-bound constructions.
//
// Every search is exhaustive over a finite set and runs in a fixed scan
// order, so witnesses are reproducible. "No witness" means none within the
// searched set.

#ifndef FLG_VERIFY_HPP
#define FLG_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flg/core.hpp"
#include "flg/instances.hpp"
#include "flg/mechanisms.hpp"
#include "flg/solver.hpp"

namespace flg {

inline constexpr int kDefaultGridPoints = 41;

// Admissible false reports, shared by all agents and sorted ascending.
//
// Line: every candidate, every true agent location, and `grid_points`
// evenly spaced points over [lo - span, hi + span], where lo/hi bound all
// agent and candidate locations and span = max(hi - lo, 1).
// Finite metric: every point of the space.
struct MisreportSet {
  std::vector<Location> reports;
  int grid_points = kDefaultGridPoints;
};

MisreportSet make_misreport_set(const Instance& instance,
                                int grid_points = kDefaultGridPoints);

struct DeviationWitness {
  std::vector<std::size_t> coalition;  // ascending agent indices
  std::vector<Location> misreports;    // aligned with coalition
  Outcome before;
  Outcome after;
  // (truthful cost, deviating cost) per member, both at the true location.
  std::vector<std::pair<Scalar, Scalar>> costs;
};

// Scans agents ascending, then reports ascending; returns the first strict
// improvement. Randomized mechanisms compare expected cost.
std::optional<DeviationWitness> find_unilateral_deviation(
    const Instance& instance, const MechanismSpec& mechanism,
    const MisreportSet& misreports);

// Number of joint reports a group search would evaluate.
std::uint64_t group_search_size(std::size_t agents, std::size_t reports,
                                int max_coalition);

// Coalitions by size ascending, then lexicographically; joint reports in
// lexicographic order. A witness needs every member strictly better off.
// Throws GuardExceeded when group_search_size exceeds `guard`.
std::optional<DeviationWitness> find_group_deviation(
    const Instance& instance, const MechanismSpec& mechanism,
    const MisreportSet& misreports, int max_coalition,
    std::uint64_t guard = kDefaultGuard);

// All n! permutations when n <= 6, otherwise `trials` seeded random ones.
// Returns a permutation p (agent i reports x[p[i]]) that changes the
// outcome.
std::optional<std::vector<std::size_t>> check_anonymity(
    const Instance& instance, const MechanismSpec& mechanism, int trials = 1000,
    std::uint64_t seed = 0);

struct RatioRow {
  std::uint64_t index = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  int k = 1;
  Scalar mechanism_cost;
  Scalar optimal_cost;
  Ratio ratio;
};

struct HistogramBucket {
  std::string label;
  std::uint64_t count = 0;
};

struct RatioReport {
  std::string mechanism;
  Objective objective = Objective::kMaximum;
  std::uint64_t count = 0;
  std::optional<Ratio> max_ratio;      // empty when count == 0
  std::optional<std::uint64_t> argmax;  // first index attaining the max
  std::vector<HistogramBucket> histogram;
  std::vector<RatioRow> rows;
};

RatioReport sweep(const RandomFamily& family, const MechanismSpec& mechanism,
                  Objective objective, std::uint64_t count,
                  std::uint64_t guard = kDefaultGuard);

enum class LowerBoundConstruction {
  kSingleDeterministic,
  kSingleRandomized,
  kTwoDeterministic,
  kTwoRandomized,
};

std::string lower_bound_name(LowerBoundConstruction c);
LowerBoundConstruction parse_lower_bound(std::string_view name);

// Runs the lower-bound case analysis on a concrete mechanism. The pivot is
// agent 2 reporting 3 when candidate 0 is selected on I with probability at
// least 1/2, otherwise agent 1 reporting -1 (the mirrored case).
struct ReplayReport {
  LowerBoundConstruction construction{};
  std::string mechanism;
  Scalar epsilon;
  std::optional<Scalar> far_point;  // two-facility constructions only
  Scalar bound;                     // 3 deterministic, 2 randomized

  Instance truthful;  // I
  Instance deviated;  // I', the pivot's misreport applied to I
  Outcome truthful_outcome;
  Outcome deviated_outcome;
  Scalar truthful_optimum;
  Scalar deviated_optimum;
  Ratio truthful_ratio;  // maximum cost
  Ratio deviated_ratio;

  Scalar left_probability;              // P(candidate 0 selected on I)
  std::optional<Scalar> far_probability;  // P(candidate L selected on I)

  std::size_t pivot_agent = 0;  // 0-based
  Scalar misreport;
  Scalar truthful_cost;  // pivot's cost on I at its true location
  Scalar deviated_cost;  // pivot's cost on I' at its true location
  Scalar margin;         // truthful_cost - deviated_cost

  bool beats_bound = false;   // deviated_ratio < bound
  bool sp_violation = false;  // margin > 0
};

ReplayReport replay_lower_bound(LowerBoundConstruction construction,
                                const MechanismSpec& mechanism,
                                const Scalar& epsilon,
                                const Scalar& far_point = Scalar(kDefaultFarPoint),
                                std::uint64_t guard = kDefaultGuard);

}  // namespace flg

#endif  // FLG_VERIFY_HPP
