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

#include "flg/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <boost/random/uniform_int_distribution.hpp>

#include "flg/errors.hpp"

namespace flg {
namespace {

bool location_less(const Location& a, const Location& b) {
  if (const auto* x = std::get_if<Scalar>(&a)) return *x < coordinate(b);
  return std::get<PointId>(a) < std::get<PointId>(b);
}

// Scratch profile for evaluating deviations without re-copying per report.
// Evaluates the mechanism on the true profile with some reports swapped in,
// and prices outcomes at the agents' true locations.
class Deviator {
 public:
  Deviator(const Instance& instance, const MechanismSpec& mechanism)
      : truth_(instance), working_(instance), mechanism_(mechanism) {
    table_.reserve(instance.num_agents());
    for (const auto& a : instance.agents()) {
      auto& row = table_.emplace_back();
      row.reserve(instance.num_candidates());
      for (const auto& c : instance.candidates()) {
        row.push_back(instance.distance(a, c));
      }
    }
  }

  Outcome run(std::span<const std::size_t> members,
              std::span<const Location* const> reports) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      working_.set_agent(members[i], *reports[i]);
    }
    Outcome out = apply_mechanism(mechanism_, working_);
    for (auto i : members) working_.set_agent(i, truth_.agents()[i]);
    return out;
  }

  Scalar cost(std::size_t agent, const Outcome& outcome) const {
    if (const auto* s = std::get_if<Selection>(&outcome)) return cost(agent, *s);
    Scalar total = 0;
    for (const auto& [selection, p] : std::get<Lottery>(outcome).atoms()) {
      total += p * cost(agent, selection);
    }
    return total;
  }

 private:
  const Scalar& cost(std::size_t agent, const Selection& s) const {
    const auto& row = table_[agent];
    const Scalar* best = &row[s.facilities.front()];
    for (auto f : s.facilities) {
      if (row[f] < *best) best = &row[f];
    }
    return *best;
  }

  const Instance& truth_;
  Instance working_;
  const MechanismSpec& mechanism_;
  std::vector<std::vector<Scalar>> table_;
};


std::vector<Scalar> truthful_costs(const Instance& instance,
                                   const Outcome& outcome) {
  std::vector<Scalar> costs;
  costs.reserve(instance.num_agents());
  for (const auto& a : instance.agents()) {
    costs.push_back(outcome_cost_at(instance, outcome, a));
  }
  return costs;
}

struct BucketEdge {
  Scalar upper;
  const char* label;
};

const std::vector<BucketEdge>& bucket_edges() {
  static const std::vector<BucketEdge> edges{
      {Scalar(5, 4), "[1,5/4)"}, {Scalar(3, 2), "[5/4,3/2)"},
      {Scalar(2), "[3/2,2)"},    {Scalar(5, 2), "[2,5/2)"},
      {Scalar(3), "[5/2,3)"},    {Scalar(4), "[3,4)"},
      {Scalar(5), "[4,5)"},      {Scalar(7), "[5,7)"},
      {Scalar(9), "[7,9)"},
  };
  return edges;
}

}  // namespace

MisreportSet make_misreport_set(const Instance& instance, int grid_points) {
  if (grid_points < 0 || grid_points == 1) {
    throw InvalidArgument("grid needs 0 or at least 2 points");
  }
  MisreportSet set;
  set.grid_points = grid_points;
  if (!instance.on_line()) {
    const auto p = std::get<FiniteMetric>(instance.space()).size();
    for (std::size_t i = 0; i < p; ++i) set.reports.emplace_back(PointId{i});
    return set;
  }

  set.reports = instance.candidates();
  set.reports.insert(set.reports.end(), instance.agents().begin(),
                     instance.agents().end());
  auto [lo_it, hi_it] = std::minmax_element(set.reports.begin(),
                                            set.reports.end(), location_less);
  const Scalar lo = coordinate(*lo_it);
  const Scalar hi = coordinate(*hi_it);
  Scalar span = hi - lo;
  if (span < 1) span = 1;
  const Scalar start = lo - span;
  const Scalar width = hi + span - start;
  for (int j = 0; j < grid_points; ++j) {
    set.reports.emplace_back(Scalar(start + width * j / (grid_points - 1)));
  }

  std::sort(set.reports.begin(), set.reports.end(), location_less);
  set.reports.erase(std::unique(set.reports.begin(), set.reports.end()),
                    set.reports.end());
  return set;
}

std::optional<DeviationWitness> find_unilateral_deviation(
    const Instance& instance, const MechanismSpec& mechanism,
    const MisreportSet& misreports) {
  return find_group_deviation(instance, mechanism, misreports, 1);
}

std::uint64_t group_search_size(std::size_t agents, std::size_t reports,
                                int max_coalition) {
  constexpr std::uint64_t kCap = ~std::uint64_t{0} / 4;
  std::uint64_t total = 0;
  std::uint64_t choose = 1;  // C(agents, size)
  std::uint64_t power = 1;   // reports^size
  for (int size = 1; size <= max_coalition && static_cast<std::size_t>(size) <= agents;
       ++size) {
    choose = choose * (agents - static_cast<std::size_t>(size) + 1) /
             static_cast<std::uint64_t>(size);
    if (reports != 0 && power > kCap / reports) return kCap;
    power *= reports;
    if (choose != 0 && power > kCap / choose) return kCap;
    total += choose * power;
    if (total > kCap) return kCap;
  }
  return total;
}

std::optional<DeviationWitness> find_group_deviation(
    const Instance& instance, const MechanismSpec& mechanism,
    const MisreportSet& misreports, int max_coalition, std::uint64_t guard) {
  if (max_coalition < 1) throw InvalidArgument("coalition size must be >= 1");
  const std::size_t n = instance.num_agents();
  const std::size_t r = misreports.reports.size();
  const auto largest = std::min<std::size_t>(static_cast<std::size_t>(max_coalition), n);
  if (group_search_size(n, r, static_cast<int>(largest)) > guard) {
    throw GuardExceeded("group deviation search exceeds guard " +
                        std::to_string(guard));
  }
  if (r == 0) return std::nullopt;

  const Outcome before = apply_mechanism(mechanism, instance);
  const std::vector<Scalar> base = truthful_costs(instance, before);
  Deviator deviator(instance, mechanism);

  std::vector<std::size_t> members;
  std::vector<std::size_t> choice;
  std::vector<const Location*> reports;
  for (std::size_t size = 1; size <= largest; ++size) {
    members.resize(size);
    std::iota(members.begin(), members.end(), std::size_t{0});
    while (true) {
      // Members already at zero cost cannot strictly improve.
      bool viable = std::ranges::none_of(
          members, [&](std::size_t i) { return sgn(base[i]) == 0; });
      if (viable) {
        choice.assign(size, 0);
        reports.assign(size, nullptr);
        while (true) {
          bool truthful = true;
          for (std::size_t t = 0; t < size; ++t) {
            reports[t] = &misreports.reports[choice[t]];
            truthful = truthful && *reports[t] == instance.agents()[members[t]];
          }
          if (!truthful) {
            Outcome after = deviator.run(members, reports);
            bool all_gain = true;
            for (std::size_t t = 0; t < size && all_gain; ++t) {
              all_gain = deviator.cost(members[t], after) < base[members[t]];
            }
            if (all_gain) {
              std::vector<std::pair<Scalar, Scalar>> costs;
              for (auto i : members) costs.emplace_back(base[i], deviator.cost(i, after));
              DeviationWitness w;
              w.coalition = members;
              for (const auto* rep : reports) w.misreports.push_back(*rep);
              w.before = before;
              w.after = std::move(after);
              w.costs = std::move(costs);
              return w;
            }
          }
          // Odometer: last member varies fastest.
          std::size_t t = size;
          while (t > 0 && choice[t - 1] == r - 1) choice[--t] = 0;
          if (t == 0) break;
          ++choice[t - 1];
        }
      }
      // Next combination in lexicographic order.
      std::size_t t = size;
      while (t > 0 && members[t - 1] == n - size + t - 1) --t;
      if (t == 0) break;
      ++members[t - 1];
      for (std::size_t u = t; u < size; ++u) members[u] = members[u - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> check_anonymity(
    const Instance& instance, const MechanismSpec& mechanism, int trials,
    std::uint64_t seed) {
  const std::size_t n = instance.num_agents();
  const Outcome reference = apply_mechanism(mechanism, instance);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  auto differs = [&](const std::vector<std::size_t>& p) {
    std::vector<Location> profile;
    profile.reserve(n);
    for (auto i : p) profile.push_back(instance.agents()[i]);
    return !(apply_mechanism(mechanism, instance.with_agents(std::move(profile))) ==
             reference);
  };

  if (n <= 6) {
    while (std::next_permutation(perm.begin(), perm.end())) {
      if (differs(perm)) return perm;
    }
    return std::nullopt;
  }

  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), 0x616e6f6eU};
  std::mt19937_64 engine(seq);
  for (int trial = 0; trial < trials; ++trial) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n - 1; i > 0; --i) {
      boost::random::uniform_int_distribution<std::size_t> pick(0, i);
      std::swap(perm[i], perm[pick(engine)]);
    }
    if (differs(perm)) return perm;
  }
  return std::nullopt;
}

RatioReport sweep(const RandomFamily& family, const MechanismSpec& mechanism,
                  Objective objective, std::uint64_t count,
                  std::uint64_t guard) {
  RatioReport report;
  report.mechanism = mechanism_name(mechanism);
  report.objective = objective;
  report.count = count;
  const auto& edges = bucket_edges();
  for (const auto& e : edges) report.histogram.push_back({e.label, 0});
  report.histogram.push_back({"[9,inf)", 0});
  report.histogram.push_back({"unbounded", 0});

  for (std::uint64_t index = 0; index < count; ++index) {
    Instance instance = random_instance(family, index);
    RatioEvaluation eval = evaluate_ratio(instance, mechanism, objective, guard);

    std::size_t bucket = edges.size() + 1;
    if (!eval.ratio.unbounded) {
      bucket = edges.size();
      for (std::size_t b = 0; b < edges.size(); ++b) {
        if (eval.ratio.value < edges[b].upper) {
          bucket = b;
          break;
        }
      }
    }
    ++report.histogram[bucket].count;

    if (!report.max_ratio || *report.max_ratio < eval.ratio) {
      report.max_ratio = eval.ratio;
      report.argmax = index;
    }
    report.rows.push_back({index, instance.num_agents(),
                           instance.num_candidates(), instance.k(),
                           std::move(eval.mechanism_cost),
                           std::move(eval.optimal_cost), std::move(eval.ratio)});
  }
  return report;
}

std::string lower_bound_name(LowerBoundConstruction c) {
  switch (c) {
    case LowerBoundConstruction::kSingleDeterministic:
      return "single-deterministic";
    case LowerBoundConstruction::kSingleRandomized:
      return "single-randomized";
    case LowerBoundConstruction::kTwoDeterministic:
      return "two-deterministic";
    case LowerBoundConstruction::kTwoRandomized:
      return "two-randomized";
  }
  return "unknown";
}

LowerBoundConstruction parse_lower_bound(std::string_view name) {
  for (auto c : {LowerBoundConstruction::kSingleDeterministic,
                 LowerBoundConstruction::kSingleRandomized,
                 LowerBoundConstruction::kTwoDeterministic,
                 LowerBoundConstruction::kTwoRandomized}) {
    if (lower_bound_name(c) == name) return c;
  }
  throw ParseError("unknown lower-bound construction \"" + std::string(name) +
                   "\"");
}

ReplayReport replay_lower_bound(LowerBoundConstruction construction,
                                const MechanismSpec& mechanism,
                                const Scalar& epsilon, const Scalar& far_point,
                                std::uint64_t guard) {
  const bool two = construction == LowerBoundConstruction::kTwoDeterministic ||
                   construction == LowerBoundConstruction::kTwoRandomized;
  const bool randomized =
      construction == LowerBoundConstruction::kSingleRandomized ||
      construction == LowerBoundConstruction::kTwoRandomized;

  PaperConstruction pc;
  pc.kind = two ? ConstructionKind::kTwoLbI : ConstructionKind::kSingleLbI;
  pc.epsilon = epsilon;
  pc.far_point = far_point;
  Instance truthful = build_paper_instance(pc);
  // Candidate order is (0, 2[, L]) in both constructions.
  constexpr std::size_t kLeftCandidate = 0;
  constexpr std::size_t kFarCandidate = 2;

  Outcome truthful_outcome = apply_mechanism(mechanism, truthful);
  Lottery truthful_lottery = as_lottery(truthful_outcome);
  Scalar left_probability = truthful_lottery.probability_of(kLeftCandidate);
  std::optional<Scalar> far_probability;
  if (two) far_probability = truthful_lottery.probability_of(kFarCandidate);

  const bool left_heavy = left_probability >= Scalar(1, 2);
  const std::size_t pivot = left_heavy ? 1 : 0;
  const Scalar misreport = left_heavy ? Scalar(3) : Scalar(-1);

  std::vector<Location> profile = truthful.agents();
  profile[pivot] = misreport;
  Instance deviated = truthful.with_agents(std::move(profile));
  Outcome deviated_outcome = apply_mechanism(mechanism, deviated);

  Scalar truthful_optimum = optimal(truthful, Objective::kMaximum, guard).value;
  Scalar deviated_optimum = optimal(deviated, Objective::kMaximum, guard).value;
  Ratio truthful_ratio = make_ratio(
      outcome_cost(truthful, truthful_outcome, Objective::kMaximum),
      truthful_optimum);
  Ratio deviated_ratio = make_ratio(
      outcome_cost(deviated, deviated_outcome, Objective::kMaximum),
      deviated_optimum);

  const Location& home = truthful.agents()[pivot];
  Scalar truthful_cost = outcome_cost_at(truthful, truthful_outcome, home);
  Scalar deviated_cost = outcome_cost_at(truthful, deviated_outcome, home);
  Scalar margin = truthful_cost - deviated_cost;
  Scalar bound = randomized ? Scalar(2) : Scalar(3);
  const bool beats = deviated_ratio < Ratio{bound, false};
  const bool violation = sgn(margin) > 0;

  return ReplayReport{
      .construction = construction,
      .mechanism = mechanism_name(mechanism),
      .epsilon = epsilon,
      .far_point = two ? std::optional<Scalar>(far_point) : std::nullopt,
      .bound = std::move(bound),
      .truthful = std::move(truthful),
      .deviated = std::move(deviated),
      .truthful_outcome = std::move(truthful_outcome),
      .deviated_outcome = std::move(deviated_outcome),
      .truthful_optimum = std::move(truthful_optimum),
      .deviated_optimum = std::move(deviated_optimum),
      .truthful_ratio = std::move(truthful_ratio),
      .deviated_ratio = std::move(deviated_ratio),
      .left_probability = std::move(left_probability),
      .far_probability = std::move(far_probability),
      .pivot_agent = pivot,
      .misreport = misreport,
      .truthful_cost = std::move(truthful_cost),
      .deviated_cost = std::move(deviated_cost),
      .margin = std::move(margin),
      .beats_bound = beats,
      .sp_violation = violation,
  };
}

}  // namespace flg
