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

#include "flg/solver.hpp"

#include <string>

#include "flg/errors.hpp"

namespace flg {
namespace {

// m^k with saturation at guard + 1.
std::uint64_t bounded_power(std::uint64_t m, int k, std::uint64_t guard) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (m != 0 && r > (guard + 1) / m) return guard + 1;
    r *= m;
  }
  return r;
}

}  // namespace

OptResult optimal(const Instance& instance, Objective objective,
                  std::uint64_t guard) {
  const std::size_t m = instance.num_candidates();
  const int k = instance.k();
  if (bounded_power(m, k, guard) > guard) {
    throw GuardExceeded("enumeration of " + std::to_string(m) + "^" +
                        std::to_string(k) + " selections exceeds guard " +
                        std::to_string(guard));
  }

  OptResult result;
  bool first = true;
  auto consider = [&](Selection s) {
    Scalar c = objective_cost(instance, s, objective);
    if (first || c < result.value) {
      result.value = std::move(c);
      result.argmins.clear();
      result.argmins.push_back(std::move(s));
      first = false;
    } else if (c == result.value) {
      result.argmins.push_back(std::move(s));
    }
  };

  // Nondecreasing index tuples enumerate each multiset exactly once.
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    consider(Selection{idx});
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - 1) --pos;
    if (pos < 0) break;
    auto next = idx[static_cast<std::size_t>(pos)] + 1;
    for (auto p = static_cast<std::size_t>(pos); p < idx.size(); ++p) {
      idx[p] = next;
    }
  }
  result.best = result.argmins.front();
  return result;
}

Ratio make_ratio(const Scalar& cost, const Scalar& optimum) {
  if (sgn(optimum) == 0) {
    return sgn(cost) == 0 ? Ratio{Scalar(1), false} : Ratio{Scalar(0), true};
  }
  return Ratio{cost / optimum, false};
}

bool operator<(const Ratio& a, const Ratio& b) {
  if (a.unbounded || b.unbounded) return !a.unbounded && b.unbounded;
  return a.value < b.value;
}

std::string to_rational_string(const Ratio& r) {
  return r.unbounded ? "inf" : to_rational_string(r.value);
}

std::string to_decimal_string(const Ratio& r) {
  return r.unbounded ? "inf" : to_decimal_string(r.value);
}

RatioEvaluation evaluate_ratio(const Instance& instance,
                               const MechanismSpec& mechanism,
                               Objective objective, std::uint64_t guard) {
  Outcome outcome = apply_mechanism(mechanism, instance);
  Scalar cost = outcome_cost(instance, outcome, objective);
  Scalar opt = optimal(instance, objective, guard).value;
  Ratio r = make_ratio(cost, opt);
  return {std::move(outcome), std::move(cost), std::move(opt), std::move(r)};
}

Ratio ratio(const Instance& instance, const MechanismSpec& mechanism,
            Objective objective, std::uint64_t guard) {
  return evaluate_ratio(instance, mechanism, objective, guard).ratio;
}

}  // namespace flg
