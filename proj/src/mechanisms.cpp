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

#include "flg/mechanisms.hpp"

#include <algorithm>
#include <string>

#include "flg/errors.hpp"

namespace flg {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_line(const Instance& instance, std::string_view mechanism) {
  if (!instance.on_line()) {
    throw MechanismMismatch(std::string(mechanism) + " requires a line space");
  }
}

void require_k(const Instance& instance, const MechanismSpec& spec) {
  if (const int k = facility_count(spec); instance.k() != k) {
    throw MechanismMismatch(mechanism_name(spec) + " places " +
                            std::to_string(k) + " facilit" +
                            (k == 1 ? "y" : "ies") + ", instance asks for " +
                            std::to_string(instance.k()));
  }
}

// Position of the smallest (or largest) reported coordinate.
const Scalar& extreme_coordinate(const Instance& instance, bool leftmost) {
  const auto& agents = instance.agents();
  const Scalar* best = &coordinate(agents.front());
  for (const auto& a : agents) {
    const Scalar& x = coordinate(a);
    if (leftmost ? x < *best : x > *best) best = &x;
  }
  return *best;
}

// Only the nearest candidate on each side of x can be closest, so two
// distances suffice. Among candidates sharing a coordinate the lowest index
// is kept.
std::size_t closest_on_line(const std::vector<Location>& candidates,
                            const Scalar& x, TieBreak tie) {
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::size_t below = kNone, above = kNone;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    const Scalar& y = coordinate(candidates[j]);
    if (y <= x && (below == kNone || y > coordinate(candidates[below]))) below = j;
    if (y >= x && (above == kNone || y < coordinate(candidates[above]))) above = j;
  }
  if (below == kNone) return above;
  if (above == kNone || below == above) return below;
  const int side = cmp(x - coordinate(candidates[below]),
                       coordinate(candidates[above]) - x);
  if (side != 0) return side < 0 ? below : above;
  switch (tie) {
    case TieBreak::kLeftward:
      return below;
    case TieBreak::kRightward:
      return above;
    case TieBreak::kLowerIndex:
      break;
  }
  return std::min(below, above);
}

std::vector<Scalar> sorted_coordinates(const Instance& instance) {
  std::vector<Scalar> xs;
  xs.reserve(instance.num_agents());
  for (const auto& a : instance.agents()) xs.push_back(coordinate(a));
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace

std::size_t closest_candidate(const Instance& instance, const Location& where,
                              TieBreak tie) {
  if (tie != TieBreak::kLowerIndex && !instance.on_line()) {
    throw MechanismMismatch("coordinate tie-breaking requires a line space");
  }
  const auto& candidates = instance.candidates();
  if (instance.on_line()) {
    return closest_on_line(candidates, coordinate(where), tie);
  }
  std::size_t best = 0;
  Scalar best_distance = instance.distance(where, candidates[0]);
  for (std::size_t j = 1; j < candidates.size(); ++j) {
    Scalar d = instance.distance(where, candidates[j]);
    if (d < best_distance) {
      best = j;
      best_distance = std::move(d);
    }
  }
  return best;
}

Selection leftmost_closest(const Instance& instance) {
  require_line(instance, "leftmost");
  const Scalar& left = extreme_coordinate(instance, true);
  return {{closest_candidate(instance, left, TieBreak::kLeftward)}};
}

Selection dictatorship(const Instance& instance, std::size_t dictator) {
  if (dictator >= instance.num_agents()) {
    throw InvalidArgument("dictator index out of range");
  }
  return {{closest_candidate(instance, instance.agents()[dictator],
                             TieBreak::kLowerIndex)}};
}

Selection two_extremes(const Instance& instance) {
  require_line(instance, "two-extremes");
  const Scalar& left = extreme_coordinate(instance, true);
  const Scalar& right = extreme_coordinate(instance, false);
  return {{closest_candidate(instance, left, TieBreak::kRightward),
           closest_candidate(instance, right, TieBreak::kLeftward)}};
}

Selection median(const Instance& instance) {
  require_line(instance, "median");
  auto xs = sorted_coordinates(instance);
  // Left median: rank ceil(n/2), 1-based.
  const Scalar& pivot = xs[(xs.size() + 1) / 2 - 1];
  return {{closest_candidate(instance, pivot, TieBreak::kLeftward)}};
}

Lottery random_dictatorship(const Instance& instance) {
  const Scalar share(1, static_cast<unsigned long>(instance.num_agents()));
  std::vector<std::pair<Selection, Scalar>> atoms;
  atoms.reserve(instance.num_agents());
  for (const auto& a : instance.agents()) {
    atoms.push_back(
        {Selection{{closest_candidate(instance, a, TieBreak::kLowerIndex)}},
         share});
  }
  return Lottery(std::move(atoms));
}

Lottery wpv(const Instance& instance, std::span<const Scalar> weights) {
  require_line(instance, "wpv");
  if (weights.size() != instance.num_agents()) {
    throw InvalidArgument("wpv needs exactly one weight per agent");
  }
  Scalar total = 0;
  for (const auto& w : weights) {
    if (sgn(w) < 0) throw InvalidArgument("wpv weights must be nonnegative");
    total += w;
  }
  if (total != 1) throw InvalidArgument("wpv weights must sum to 1");

  auto xs = sorted_coordinates(instance);
  std::vector<std::pair<Selection, Scalar>> atoms;
  for (std::size_t r = 0; r < xs.size(); ++r) {
    if (sgn(weights[r]) == 0) continue;
    atoms.push_back(
        {Selection{{closest_candidate(instance, xs[r], TieBreak::kLeftward)}},
         weights[r]});
  }
  return Lottery(std::move(atoms));
}

Selection closest_to_mean(const Instance& instance) {
  require_line(instance, "mean");
  Scalar sum = 0;
  for (const auto& a : instance.agents()) sum += coordinate(a);
  Scalar mean = sum / static_cast<unsigned long>(instance.num_agents());
  return {{closest_candidate(instance, mean, TieBreak::kLeftward)}};
}

Outcome apply_mechanism(const MechanismSpec& spec, const Instance& instance) {
  require_k(instance, spec);
  return std::visit(
      overloaded{
          [&](const mech::LeftmostClosest&) -> Outcome {
            return leftmost_closest(instance);
          },
          [&](const mech::Dictatorship& d) -> Outcome {
            return dictatorship(instance, d.dictator);
          },
          [&](const mech::TwoExtremes&) -> Outcome {
            return two_extremes(instance);
          },
          [&](const mech::Median&) -> Outcome { return median(instance); },
          [&](const mech::RandomDictatorship&) -> Outcome {
            return random_dictatorship(instance);
          },
          [&](const mech::Wpv& w) -> Outcome { return wpv(instance, w.weights); },
          [&](const mech::ClosestToMean&) -> Outcome {
            return closest_to_mean(instance);
          },
      },
      spec);
}

bool is_randomized(const MechanismSpec& spec) {
  return std::holds_alternative<mech::RandomDictatorship>(spec) ||
         std::holds_alternative<mech::Wpv>(spec);
}

int facility_count(const MechanismSpec& spec) {
  return std::holds_alternative<mech::TwoExtremes>(spec) ? 2 : 1;
}

bool requires_line(const MechanismSpec& spec) {
  return !std::holds_alternative<mech::Dictatorship>(spec) &&
         !std::holds_alternative<mech::RandomDictatorship>(spec);
}

std::string mechanism_name(const MechanismSpec& spec) {
  return std::visit(
      overloaded{
          [](const mech::LeftmostClosest&) -> std::string { return "leftmost"; },
          [](const mech::Dictatorship& d) -> std::string {
            return "dictator:" + std::to_string(d.dictator + 1);
          },
          [](const mech::TwoExtremes&) -> std::string { return "two-extremes"; },
          [](const mech::Median&) -> std::string { return "median"; },
          [](const mech::RandomDictatorship&) -> std::string { return "rd"; },
          [](const mech::Wpv& w) -> std::string {
            std::string s = "wpv:";
            for (std::size_t i = 0; i < w.weights.size(); ++i) {
              if (i > 0) s += ',';
              s += to_rational_string(w.weights[i]);
            }
            return s;
          },
          [](const mech::ClosestToMean&) -> std::string { return "mean"; },
      },
      spec);
}

MechanismSpec parse_mechanism(std::string_view name) {
  if (name == "leftmost") return mech::LeftmostClosest{};
  if (name == "two-extremes") return mech::TwoExtremes{};
  if (name == "median") return mech::Median{};
  if (name == "rd") return mech::RandomDictatorship{};
  if (name == "mean") return mech::ClosestToMean{};

  constexpr std::string_view kDictator = "dictator:";
  if (name.starts_with(kDictator)) {
    std::string_view digits = name.substr(kDictator.size());
    if (digits.empty() || digits.size() > 9 ||
        !std::ranges::all_of(digits, [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("bad dictator index in \"" + std::string(name) + "\"");
    }
    auto i = std::stoul(std::string(digits));
    if (i == 0) throw ParseError("dictator index is 1-based");
    return mech::Dictatorship{i - 1};
  }

  constexpr std::string_view kWpv = "wpv:";
  if (name.starts_with(kWpv)) {
    mech::Wpv w;
    std::string_view rest = name.substr(kWpv.size());
    while (true) {
      auto comma = rest.find(',');
      w.weights.push_back(parse_scalar(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return w;
  }
  throw ParseError("unknown mechanism \"" + std::string(name) + "\"");
}

}  // namespace flg
