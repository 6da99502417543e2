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

#ifndef FLG_SOLVER_HPP
#define FLG_SOLVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "flg/core.hpp"
#include "flg/mechanisms.hpp"

namespace flg {

inline constexpr std::uint64_t kDefaultGuard = 10'000'000;

struct OptResult {
  Selection best;                 // first argmin in enumeration order
  Scalar value;
  std::vector<Selection> argmins;  // sorted-index form, ascending
};

// Exhaustive search over all size-k multisets of candidates. Throws
// GuardExceeded when m^k > guard.
OptResult optimal(const Instance& instance, Objective objective,
                  std::uint64_t guard = kDefaultGuard);

// Mechanism cost over optimal cost. When the optimum is zero the ratio is
// 1 if the mechanism is also optimal and unbounded otherwise.
struct Ratio {
  Scalar value{1};
  bool unbounded = false;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

Ratio make_ratio(const Scalar& cost, const Scalar& optimum);
bool operator<(const Ratio& a, const Ratio& b);
std::string to_rational_string(const Ratio& r);  // "inf" when unbounded
std::string to_decimal_string(const Ratio& r);

struct RatioEvaluation {
  Outcome outcome;
  Scalar mechanism_cost;
  Scalar optimal_cost;
  Ratio ratio;
};

// Randomized mechanisms are scored by expected cost against the fixed
// per-instance optimum.
RatioEvaluation evaluate_ratio(const Instance& instance,
                               const MechanismSpec& mechanism,
                               Objective objective,
                               std::uint64_t guard = kDefaultGuard);

Ratio ratio(const Instance& instance, const MechanismSpec& mechanism,
            Objective objective, std::uint64_t guard = kDefaultGuard);

}  // namespace flg

#endif  // FLG_SOLVER_HPP
