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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "flg/errors.hpp"
#include "flg/instances.hpp"
#include "flg/solver.hpp"
#include "test_util.hpp"

namespace flg {
namespace {

using testing::construction;
using testing::line;
using testing::pick;
using testing::Q;

// Independent optimum: all ordered k-tuples, cost computed from raw
// distances without the library's cost functions.
struct Brute {
  Scalar value;
  std::set<std::vector<std::size_t>> argmins;  // sorted index tuples
};

Brute brute_force(const Instance& inst, Objective obj) {
  const std::size_t m = inst.num_candidates();
  std::vector<std::vector<std::size_t>> tuples;
  for (std::size_t a = 0; a < m; ++a) {
    if (inst.k() == 1) {
      tuples.push_back({a});
      continue;
    }
    for (std::size_t b = 0; b < m; ++b) tuples.push_back({a, b});
  }
  std::optional<Scalar> best;
  std::vector<std::pair<Scalar, std::vector<std::size_t>>> scored;
  for (auto t : tuples) {
    Scalar total = 0;
    for (const auto& agent : inst.agents()) {
      Scalar d = inst.distance(agent, inst.candidates()[t[0]]);
      for (std::size_t f : t) d = std::min(d, inst.distance(agent, inst.candidates()[f]));
      if (obj == Objective::kSocial) {
        total += d;
      } else {
        total = std::max(total, d);
      }
    }
    if (!best || total < *best) best = total;
    std::sort(t.begin(), t.end());
    scored.emplace_back(total, t);
  }
  Brute out{*best, {}};
  for (const auto& [v, t] : scored) {
    if (v == *best) out.argmins.insert(t);
  }
  return out;
}

TEST(OptimalTest, SingleFacilityLowerBoundInstance) {
  Instance ip = build_paper_instance(construction(ConstructionKind::kSingleLbIPrime, "1/10"));
  OptResult r = optimal(ip, Objective::kMaximum);
  EXPECT_EQ(r.best, pick({1}));
  EXPECT_EQ(r.value, Q("11/10"));
}

TEST(OptimalTest, TightSocialCostExample) {
  Instance i = build_paper_instance(construction(ConstructionKind::kExample1, "1/100", 4));
  OptResult r = optimal(i, Objective::kSocial);
  EXPECT_EQ(r.best, pick({1, 2}));
  EXPECT_EQ(r.value, Q("1/3"));
  EXPECT_EQ(r.argmins, std::vector<Selection>{pick({1, 2})});
}

TEST(OptimalTest, TwoFacilityLowerBoundInstance) {
  Instance ip = build_paper_instance(
      construction(ConstructionKind::kTwoLbIPrime, "1/10", 4, "1000"));
  OptResult r = optimal(ip, Objective::kMaximum);
  EXPECT_EQ(r.best, pick({1, 2}));
  EXPECT_EQ(r.value, Q("11/10"));
}

TEST(OptimalTest, DuplicateFacilitiesAndTiedArgmins) {
  Instance single = line({"1"}, {"1", "5"}, 2);
  OptResult r = optimal(single, Objective::kSocial);
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(r.best, pick({0, 0}));
  EXPECT_EQ(r.argmins, (std::vector<Selection>{pick({0, 0}), pick({0, 1})}));

  Instance tied = line({"0", "2"}, {"1", "1"});
  EXPECT_EQ(optimal(tied, Objective::kMaximum).argmins,
            (std::vector<Selection>{pick({0}), pick({1})}));
}

TEST(OptimalTest, Guard) {
  Instance i = line({"0", "1"}, {"0", "1", "2", "3"}, 2);
  EXPECT_THROW(optimal(i, Objective::kSocial, 15), GuardExceeded);
  EXPECT_NO_THROW(optimal(i, Objective::kSocial, 16));
}

TEST(RatioTest, ZeroOptimum) {
  EXPECT_EQ(make_ratio(0, 0), (Ratio{1, false}));
  EXPECT_TRUE(make_ratio(Q("1/2"), 0).unbounded);
  EXPECT_EQ(to_rational_string(make_ratio(1, 0)), "inf");
  EXPECT_EQ(to_decimal_string(make_ratio(1, 0)), "inf");
  EXPECT_EQ(make_ratio(3, 2).value, Q("3/2"));
  EXPECT_TRUE(make_ratio(100, 1) < make_ratio(1, 0));
  EXPECT_FALSE(make_ratio(1, 0) < make_ratio(2, 0));
  EXPECT_TRUE(make_ratio(1, 1) < make_ratio(3, 2));

  Instance all_on = line({"2", "2"}, {"0", "2"});
  EXPECT_EQ(ratio(all_on, mech::LeftmostClosest{}, Objective::kMaximum), (Ratio{1, false}));
}

TEST(RatioTest, TightSocialCostExample) {
  for (int n : {4, 10}) {
    for (const char* eps : {"1/100", "1/1000000"}) {
      Instance i = build_paper_instance(construction(ConstructionKind::kExample1, eps, n));
      RatioEvaluation ev = evaluate_ratio(i, mech::TwoExtremes{}, Objective::kSocial);
      Scalar e = Q(eps);
      EXPECT_EQ(ev.optimal_cost, Q("1/3"));
      EXPECT_EQ(ev.mechanism_cost, (Q("2/3") - e) * (n - 2) + Q("1/3") - e);
      EXPECT_EQ(ev.ratio.value, (2 - 3 * e) * (n - 2) + 1 - 3 * e);
    }
  }
  Instance i = build_paper_instance(construction(ConstructionKind::kExample1, "1/1000000", 10));
  Ratio r = ratio(i, mech::TwoExtremes{}, Objective::kSocial);
  EXPECT_LT(abs(r.value - 17), Q("1/10000"));
}

TEST(RatioTest, RandomizedScoredInExpectation) {
  Instance i = build_paper_instance(construction(ConstructionKind::kSingleLbI, "1/10"));
  RatioEvaluation ev = evaluate_ratio(i, mech::RandomDictatorship{}, Objective::kMaximum);
  EXPECT_EQ(ev.mechanism_cost, Q("11/10"));
  EXPECT_EQ(ev.optimal_cost, Q("11/10"));
  EXPECT_EQ(ev.ratio.value, 1);
}

class OptimalPropertyTest : public ::testing::TestWithParam<FamilyKind> {
 protected:
  RandomFamily family(int k) const {
    RandomFamily f;
    f.kind = GetParam();
    f.n = 4;
    f.m = 4;
    f.k = k;
    f.seed = 23;
    f.grid_denominator = 3;
    return f;
  }
};

TEST_P(OptimalPropertyTest, MatchesBruteForce) {
  for (int k : {1, 2}) {
    for (std::uint64_t idx = 0; idx < 150; ++idx) {
      Instance inst = random_instance(family(k), idx);
      for (Objective obj : {Objective::kSocial, Objective::kMaximum}) {
        OptResult r = optimal(inst, obj);
        Brute b = brute_force(inst, obj);
        EXPECT_EQ(r.value, b.value);
        std::set<std::vector<std::size_t>> got;
        for (const auto& s : r.argmins) got.insert(s.facilities);
        EXPECT_EQ(got, b.argmins);
        EXPECT_EQ(r.best, r.argmins.front());
      }
    }
  }
}

TEST_P(OptimalPropertyTest, InvariantUnderRelabelling) {
  std::mt19937_64 rng(99);
  for (std::uint64_t idx = 0; idx < 100; ++idx) {
    Instance inst = random_instance(family(2), idx);
    std::vector<Location> agents = inst.agents();
    std::shuffle(agents.begin(), agents.end(), rng);
    std::vector<Location> cands = inst.candidates();
    std::shuffle(cands.begin(), cands.end(), rng);
    Instance relabelled = inst.on_line()
        ? Instance::on_line(
              [&] {
                std::vector<Scalar> xs;
                for (const auto& a : agents) xs.push_back(coordinate(a));
                return xs;
              }(),
              [&] {
                std::vector<Scalar> ys;
                for (const auto& c : cands) ys.push_back(coordinate(c));
                return ys;
              }(),
              2)
        : [&] {
            std::vector<std::size_t> a, c;
            for (const auto& l : agents) a.push_back(std::get<PointId>(l).index);
            for (const auto& l : cands) c.push_back(std::get<PointId>(l).index);
            return Instance::on_metric(std::get<FiniteMetric>(inst.space()), a, c, 2);
          }();
    for (Objective obj : {Objective::kSocial, Objective::kMaximum}) {
      EXPECT_EQ(optimal(inst, obj).value, optimal(relabelled, obj).value);
    }
  }
}

TEST_P(OptimalPropertyTest, SecondFacilityNeverHurtsAndMechanismsAreNoBetter) {
  for (std::uint64_t idx = 0; idx < 100; ++idx) {
    Instance one = random_instance(family(1), idx);
    Instance two = random_instance(family(2), idx);
    for (Objective obj : {Objective::kSocial, Objective::kMaximum}) {
      EXPECT_LE(optimal(two, obj).value, optimal(one, obj).value);
      std::vector<MechanismSpec> specs{mech::Dictatorship{1}, mech::RandomDictatorship{}};
      if (one.on_line()) {
        specs.insert(specs.end(), {mech::LeftmostClosest{}, mech::Median{},
                                   mech::ClosestToMean{}});
        RatioEvaluation ev = evaluate_ratio(two, mech::TwoExtremes{}, obj);
        EXPECT_GE(ev.mechanism_cost, ev.optimal_cost);
        EXPECT_FALSE(ev.ratio < (Ratio{1, false}));
      }
      for (const auto& s : specs) {
        RatioEvaluation ev = evaluate_ratio(one, s, obj);
        EXPECT_GE(ev.mechanism_cost, ev.optimal_cost);
        EXPECT_FALSE(ev.ratio < (Ratio{1, false}));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Families, OptimalPropertyTest,
                         ::testing::Values(FamilyKind::kLineUniform,
                                           FamilyKind::kMetricClosure),
                         [](const auto& info) {
                           return info.param == FamilyKind::kLineUniform ? "Line"
                                                                         : "Metric";
                         });

}  // namespace
}  // namespace flg
