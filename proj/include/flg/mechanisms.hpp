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

#ifndef FLG_MECHANISMS_HPP
#define FLG_MECHANISMS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "flg/core.hpp"

namespace flg {

namespace mech {

// Closest candidate to the leftmost agent. Line, k=1.
struct LeftmostClosest {
  friend bool operator==(const LeftmostClosest&, const LeftmostClosest&) = default;
};

// Closest candidate to a fixed agent (0-based). Any space, k=1.
struct Dictatorship {
  std::size_t dictator = 0;
  friend bool operator==(const Dictatorship&, const Dictatorship&) = default;
};

// Closest candidates to the leftmost and rightmost agents. Line, k=2.
struct TwoExtremes {
  friend bool operator==(const TwoExtremes&, const TwoExtremes&) = default;
};

// Closest candidate to the left median agent. Line, k=1.
struct Median {
  friend bool operator==(const Median&, const Median&) = default;
};

// Every agent votes for its closest candidate; votes/n. Any space, k=1.
struct RandomDictatorship {
  friend bool operator==(const RandomDictatorship&,
                         const RandomDictatorship&) = default;
};

// Weighted percentile voting: weights[r] goes to the closest candidate of
// the agent with sorted rank r (r = 0 is the leftmost). Line, k=1.
struct Wpv {
  std::vector<Scalar> weights;
  friend bool operator==(const Wpv&, const Wpv&) = default;
};

// Closest candidate to the mean reported coordinate. Not strategy-proof;
// kept as a target the falsifier must catch. Line, k=1.
struct ClosestToMean {
  friend bool operator==(const ClosestToMean&, const ClosestToMean&) = default;
};

}  // namespace mech

using MechanismSpec =
    std::variant<mech::LeftmostClosest, mech::Dictatorship, mech::TwoExtremes,
                 mech::Median, mech::RandomDictatorship, mech::Wpv,
                 mech::ClosestToMean>;

// How to choose among equidistant candidates.
enum class TieBreak {
  kLowerIndex,  // smallest candidate index
  kLeftward,    // smallest coordinate, then smallest index
  kRightward,   // largest coordinate, then smallest index
};

// Index of the candidate closest to `where`. The coordinate rules require a
// line instance.
std::size_t closest_candidate(const Instance& instance, const Location& where,
                              TieBreak tie);

Selection leftmost_closest(const Instance& instance);
Selection dictatorship(const Instance& instance, std::size_t dictator);
Selection two_extremes(const Instance& instance);
Selection median(const Instance& instance);
Lottery random_dictatorship(const Instance& instance);
Lottery wpv(const Instance& instance, std::span<const Scalar> weights);
Selection closest_to_mean(const Instance& instance);

// Throws MechanismMismatch when the instance's space or k is unsupported.
Outcome apply_mechanism(const MechanismSpec& spec, const Instance& instance);

bool is_randomized(const MechanismSpec& spec);
// Facility count the mechanism produces.
int facility_count(const MechanismSpec& spec);
bool requires_line(const MechanismSpec& spec);

// Command-line names: leftmost, dictator:<i> (1-based), two-extremes,
// median, rd, wpv:<w1,w2,...>, mean.
std::string mechanism_name(const MechanismSpec& spec);
MechanismSpec parse_mechanism(std::string_view name);

}  // namespace flg

#endif  // FLG_MECHANISMS_HPP
