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

#include "flg/core.hpp"

#include <algorithm>
#include <string>

#include "flg/errors.hpp"

namespace flg {

FiniteMetric::FiniteMetric(const std::vector<std::vector<Scalar>>& matrix)
    : points_(matrix.size()) {
  if (points_ == 0) throw InvalidArgument("metric needs at least one point");
  entries_.reserve(points_ * points_);
  for (const auto& row : matrix) {
    if (row.size() != points_) {
      throw InvalidArgument("distance matrix is not square");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  for (std::size_t i = 0; i < points_; ++i) {
    if (at(i, i) != 0) throw InvalidArgument("nonzero diagonal entry");
    for (std::size_t j = i + 1; j < points_; ++j) {
      if (at(i, j) != at(j, i)) {
        throw InvalidArgument("distance matrix is not symmetric");
      }
      if (sgn(at(i, j)) < 0) throw InvalidArgument("negative distance");
    }
  }
  for (std::size_t l = 0; l < points_; ++l) {
    for (std::size_t i = 0; i < points_; ++i) {
      for (std::size_t j = 0; j < points_; ++j) {
        if (at(i, j) > at(i, l) + at(l, j)) {
          throw InvalidArgument("triangle inequality violated at (" +
                                std::to_string(i + 1) + "," +
                                std::to_string(l + 1) + "," +
                                std::to_string(j + 1) + ")");
        }
      }
    }
  }
}

const Scalar& FiniteMetric::at(std::size_t i, std::size_t j) const {
  if (i >= points_ || j >= points_) {
    throw InvalidArgument("metric point index out of range");
  }
  return entries_[i * points_ + j];
}

std::vector<std::vector<Scalar>> FiniteMetric::matrix() const {
  std::vector<std::vector<Scalar>> rows(points_);
  for (std::size_t i = 0; i < points_; ++i) {
    rows[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * points_),
                   entries_.begin() +
                       static_cast<std::ptrdiff_t>((i + 1) * points_));
  }
  return rows;
}

Scalar distance(const Space& space, const Location& a, const Location& b) {
  if (std::holds_alternative<Line>(space)) {
    return abs_diff(coordinate(a), coordinate(b));
  }
  const auto* pa = std::get_if<PointId>(&a);
  const auto* pb = std::get_if<PointId>(&b);
  if (pa == nullptr || pb == nullptr) {
    throw InvalidArgument("metric distance needs point indices");
  }
  return std::get<FiniteMetric>(space).at(pa->index, pb->index);
}

const Scalar& coordinate(const Location& location) {
  if (const auto* x = std::get_if<Scalar>(&location)) return *x;
  throw InvalidArgument("location is not a line coordinate");
}

Instance::Instance(Space space, std::vector<Location> agents,
                   std::vector<Location> candidates, int k)
    : Instance(std::make_shared<const Space>(std::move(space)),
               std::move(agents), std::move(candidates), k) {}

Instance::Instance(std::shared_ptr<const Space> space,
                   std::vector<Location> agents,
                   std::vector<Location> candidates, int k)
    : space_(std::move(space)),
      agents_(std::move(agents)),
      candidates_(std::move(candidates)),
      k_(k) {
  validate();
}

Instance Instance::on_line(const std::vector<Scalar>& agents,
                           const std::vector<Scalar>& candidates, int k) {
  return Instance(Line{}, std::vector<Location>(agents.begin(), agents.end()),
                  std::vector<Location>(candidates.begin(), candidates.end()),
                  k);
}

Instance Instance::on_metric(FiniteMetric metric,
                             const std::vector<std::size_t>& agents,
                             const std::vector<std::size_t>& candidates,
                             int k) {
  std::vector<Location> a, c;
  a.reserve(agents.size());
  c.reserve(candidates.size());
  for (auto i : agents) a.emplace_back(PointId{i});
  for (auto i : candidates) c.emplace_back(PointId{i});
  return Instance(std::move(metric), std::move(a), std::move(c), k);
}

Instance Instance::with_agents(std::vector<Location> agents) const {
  return Instance(space_, std::move(agents), candidates_, k_);
}

void Instance::set_agent(std::size_t i, Location location) {
  if (i >= agents_.size()) throw InvalidArgument("agent index out of range");
  check_location(location);
  agents_[i] = std::move(location);
}

void Instance::check_location(const Location& loc) const {
  if (on_line()) {
    if (!std::holds_alternative<Scalar>(loc)) {
      throw InvalidArgument("line instance holds a metric point");
    }
  } else {
    const auto* p = std::get_if<PointId>(&loc);
    if (p == nullptr) {
      throw InvalidArgument("metric instance holds a line coordinate");
    }
    if (p->index >= std::get<FiniteMetric>(*space_).size()) {
      throw InvalidArgument("metric point index out of range");
    }
  }
}

void Instance::validate() const {
  if (agents_.empty()) throw InvalidArgument("instance needs at least one agent");
  if (candidates_.empty()) {
    throw InvalidArgument("instance needs at least one candidate");
  }
  if (k_ < 1 || k_ > 2) throw InvalidArgument("facility count must be 1 or 2");
  for (const auto& a : agents_) check_location(a);
  for (const auto& c : candidates_) check_location(c);
}

bool operator==(const Instance& a, const Instance& b) {
  return a.k_ == b.k_ && *a.space_ == *b.space_ && a.agents_ == b.agents_ &&
         a.candidates_ == b.candidates_;
}

Lottery::Lottery(std::vector<std::pair<Selection, Scalar>> atoms) {
  Scalar total = 0;
  for (const auto& [selection, p] : atoms) {
    if (sgn(p) < 0) throw InvalidArgument("negative probability");
    if (selection.facilities.empty()) {
      throw InvalidArgument("empty selection in lottery");
    }
    total += p;
  }
  if (total != 1) {
    throw InvalidArgument("probabilities sum to " + to_rational_string(total) +
                          ", not 1");
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& atom : atoms) {
    if (sgn(atom.second) == 0) continue;
    if (!atoms_.empty() && atoms_.back().first == atom.first) {
      atoms_.back().second += atom.second;
    } else {
      atoms_.push_back(std::move(atom));
    }
  }
}

Lottery Lottery::point_mass(Selection selection) {
  return Lottery({{std::move(selection), Scalar(1)}});
}

Scalar Lottery::probability_of(std::size_t candidate) const {
  Scalar p = 0;
  for (const auto& [selection, q] : atoms_) {
    if (std::ranges::find(selection.facilities, candidate) !=
        selection.facilities.end()) {
      p += q;
    }
  }
  return p;
}

Lottery as_lottery(const Outcome& outcome) {
  if (const auto* s = std::get_if<Selection>(&outcome)) {
    return Lottery::point_mass(*s);
  }
  return std::get<Lottery>(outcome);
}

bool is_randomized(const Outcome& outcome) {
  return std::holds_alternative<Lottery>(outcome);
}

void validate_outcome(const Instance& instance, const Outcome& outcome) {
  auto check = [&](const Selection& s) {
    if (s.facilities.empty()) throw InvalidArgument("empty selection");
    for (auto j : s.facilities) {
      if (j >= instance.num_candidates()) {
        throw InvalidArgument("candidate index out of range");
      }
    }
  };
  if (const auto* s = std::get_if<Selection>(&outcome)) {
    check(*s);
  } else {
    for (const auto& atom : std::get<Lottery>(outcome).atoms()) check(atom.first);
  }
}

Scalar cost_at(const Instance& instance, const Selection& selection,
               const Location& where) {
  if (selection.facilities.empty()) throw InvalidArgument("empty selection");
  const auto& candidates = instance.candidates();
  Scalar best;
  bool first = true;
  for (auto j : selection.facilities) {
    if (j >= candidates.size()) {
      throw InvalidArgument("candidate index out of range");
    }
    Scalar d = instance.distance(where, candidates[j]);
    if (first || d < best) {
      best = std::move(d);
      first = false;
    }
  }
  return best;
}

Scalar agent_cost(const Instance& instance, const Selection& selection,
                  std::size_t agent) {
  if (agent >= instance.num_agents()) {
    throw InvalidArgument("agent index out of range");
  }
  return cost_at(instance, selection, instance.agents()[agent]);
}

Scalar social_cost(const Instance& instance, const Selection& selection) {
  Scalar total = 0;
  for (const auto& a : instance.agents()) total += cost_at(instance, selection, a);
  return total;
}

Scalar max_cost(const Instance& instance, const Selection& selection) {
  Scalar worst = 0;
  for (const auto& a : instance.agents()) {
    Scalar c = cost_at(instance, selection, a);
    if (c > worst) worst = std::move(c);
  }
  return worst;
}

Scalar objective_cost(const Instance& instance, const Selection& selection,
                      Objective objective) {
  return objective == Objective::kSocial ? social_cost(instance, selection)
                                         : max_cost(instance, selection);
}

Scalar expected_cost(const Instance& instance, const Lottery& lottery,
                     Objective objective) {
  Scalar total = 0;
  for (const auto& [selection, p] : lottery.atoms()) {
    total += p * objective_cost(instance, selection, objective);
  }
  return total;
}

Scalar expected_cost_at(const Instance& instance, const Lottery& lottery,
                        const Location& where) {
  Scalar total = 0;
  for (const auto& [selection, p] : lottery.atoms()) {
    total += p * cost_at(instance, selection, where);
  }
  return total;
}

Scalar outcome_cost(const Instance& instance, const Outcome& outcome,
                    Objective objective) {
  if (const auto* s = std::get_if<Selection>(&outcome)) {
    return objective_cost(instance, *s, objective);
  }
  return expected_cost(instance, std::get<Lottery>(outcome), objective);
}

Scalar outcome_cost_at(const Instance& instance, const Outcome& outcome,
                       const Location& where) {
  if (const auto* s = std::get_if<Selection>(&outcome)) {
    return cost_at(instance, *s, where);
  }
  return expected_cost_at(instance, std::get<Lottery>(outcome), where);
}

const char* objective_name(Objective objective) {
  return objective == Objective::kSocial ? "sc" : "mc";
}

}  // namespace flg
