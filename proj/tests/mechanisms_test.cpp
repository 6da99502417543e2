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

#include <gtest/gtest.h>

#include "flg/errors.hpp"
#include "flg/instances.hpp"
#include "flg/mechanisms.hpp"
#include "test_util.hpp"

namespace flg {
namespace {

using testing::construction;
using testing::line;
using testing::pick;
using testing::Q;

const Scalar& cand(const Instance& i, const Selection& s, std::size_t f = 0) {
  return coordinate(i.candidates()[s.facilities[f]]);
}

// Reference for the coordinate tie rules: among candidates at minimum
// distance, the one with smallest (or largest) coordinate, then index.
std::size_t reference_closest(const Instance& inst, const Scalar& x, bool rightward) {
  std::vector<std::size_t> order(inst.num_candidates());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto key = [&](std::size_t j) {
    const Scalar& y = coordinate(inst.candidates()[j]);
    Scalar d = y > x ? Scalar(y - x) : Scalar(x - y);
    return std::make_tuple(d, rightward ? Scalar(-y) : y, j);
  };
  return *std::min_element(order.begin(), order.end(), [&](auto a, auto b) {
    return key(a) < key(b);
  });
}

TEST(LeftmostTest, Examples) {
  Instance i = line({"9/10", "11/10"}, {"0", "2"});
  EXPECT_EQ(cand(i, leftmost_closest(i)), 0);

  Instance remark = build_paper_instance(construction(ConstructionKind::kWpvRemark, "1/100"));
  EXPECT_EQ(cand(remark, leftmost_closest(remark)), Q("1/100"));

  Instance tie = line({"1", "3/2"}, {"2", "0"});
  EXPECT_EQ(cand(tie, leftmost_closest(tie)), 0);
}

TEST(LeftmostTest, DuplicateCandidateBreaksOnIndex) {
  Instance dup = line({"1"}, {"2", "0", "0"});
  EXPECT_EQ(leftmost_closest(dup), pick({1}));
}

TEST(LeftmostTest, RejectsMetric) {
  Instance metric = Instance::on_metric(FiniteMetric({{0, 1}, {1, 0}}), {0}, {1});
  EXPECT_THROW(leftmost_closest(metric), MechanismMismatch);
  EXPECT_THROW(apply_mechanism(mech::LeftmostClosest{}, metric), MechanismMismatch);
}

TEST(DictatorshipTest, Examples) {
  Instance i = line({"9/10", "11/10"}, {"0", "2"});
  EXPECT_EQ(cand(i, dictatorship(i, 1)), 2);
  EXPECT_THROW(dictatorship(i, 2), InvalidArgument);

  // Points 1..3; agent at point 1, candidates at points 2 and 3.
  FiniteMetric metric({{0, 5, 4}, {5, 0, 1}, {4, 1, 0}});
  Instance m = Instance::on_metric(metric, {0}, {1, 2});
  EXPECT_EQ(dictatorship(m, 0), pick({1}));
}

TEST(DictatorshipTest, TiesGoToLowerIndex) {
  Instance tie = line({"1"}, {"2", "0"});
  EXPECT_EQ(dictatorship(tie, 0), pick({0}));
}

TEST(TwoExtremesTest, TightExample) {
  Instance i = build_paper_instance(construction(ConstructionKind::kExample1, "1/100", 4));
  Selection s = two_extremes(i);
  EXPECT_EQ(cand(i, s, 0), Q("2/3") + Q("1/100"));
  EXPECT_EQ(cand(i, s, 1), 2);
}

TEST(TwoExtremesTest, TieRulesCross) {
  Instance i = line({"1", "1"}, {"0", "2"}, 2);
  Selection s = two_extremes(i);
  EXPECT_EQ(cand(i, s, 0), 2);
  EXPECT_EQ(cand(i, s, 1), 0);
}

TEST(TwoExtremesTest, SingleCandidate) {
  Instance i = line({"3", "3"}, {"1"}, 2);
  EXPECT_EQ(two_extremes(i), pick({0, 0}));
}

TEST(MedianTest, Examples) {
  Instance odd = line({"0", "1", "10"}, {"0", "9"});
  EXPECT_EQ(cand(odd, median(odd)), 0);
  Instance single = line({"7"}, {"0", "9", "6"});
  EXPECT_EQ(median(single), dictatorship(single, 0));
  Instance even = line({"6", "0", "5", "1"}, {"0", "6"});
  EXPECT_EQ(cand(even, median(even)), 0);
  Instance context = build_paper_instance(
      construction(ConstructionKind::kMedianContext, "1/10", 5));
  EXPECT_EQ(median(context), pick({1}));
}

TEST(RandomDictatorshipTest, Examples) {
  Instance i = line({"9/10", "11/10"}, {"0", "2"});
  EXPECT_EQ(random_dictatorship(i),
            Lottery({{pick({0}), Q("1/2")}, {pick({1}), Q("1/2")}}));
  Instance same = line({"3/2", "3/2", "3/2"}, {"0", "2"});
  EXPECT_EQ(random_dictatorship(same), Lottery::point_mass(pick({1})));
  Instance votes = line({"0", "0", "2"}, {"0", "2"});
  EXPECT_EQ(random_dictatorship(votes),
            Lottery({{pick({0}), Q("2/3")}, {pick({1}), Q("1/3")}}));
}

TEST(WpvTest, LeftmostWeightIsMechanismOne) {
  RandomFamily f;
  f.n = 4;
  f.m = 3;
  f.seed = 3;
  std::vector<Scalar> w{1, 0, 0, 0};
  for (std::uint64_t idx = 0; idx < 100; ++idx) {
    Instance inst = random_line_instance(f, idx);
    EXPECT_EQ(wpv(inst, w), Lottery::point_mass(leftmost_closest(inst)));
  }
}

TEST(WpvTest, RemarkInstanceSplitsBetweenOuterCandidates) {
  Instance remark = build_paper_instance(construction(ConstructionKind::kWpvRemark, "1/100"));
  std::vector<Scalar> w{Q("3/10"), Q("7/10")};
  EXPECT_EQ(wpv(remark, w),
            Lottery({{pick({0}), Q("3/10")}, {pick({2}), Q("7/10")}}));
  EXPECT_EQ(expected_cost(remark, wpv(remark, w), Objective::kMaximum),
            Q("299/100"));
}

TEST(WpvTest, CoincidentAgentsGivePointMass) {
  Instance i = line({"1", "1", "1"}, {"0", "3"});
  std::vector<Scalar> w{Q("1/3"), Q("1/3"), Q("1/3")};
  EXPECT_EQ(wpv(i, w), Lottery::point_mass(pick({0})));
}

TEST(WpvTest, MalformedWeights) {
  Instance i = line({"1", "2"}, {"0", "3"});
  EXPECT_THROW(wpv(i, std::vector<Scalar>{1}), InvalidArgument);
  EXPECT_THROW(wpv(i, std::vector<Scalar>{Q("1/2"), Q("1/3")}), InvalidArgument);
  EXPECT_THROW(wpv(i, std::vector<Scalar>{Q("3/2"), Q("-1/2")}), InvalidArgument);
}

TEST(ClosestToMeanTest, TieGoesLeft) {
  Instance i = build_paper_instance(construction(ConstructionKind::kSingleLbI, "1/10"));
  EXPECT_EQ(closest_to_mean(i), pick({0}));
  Instance ip = build_paper_instance(construction(ConstructionKind::kSingleLbIPrime, "1/10"));
  EXPECT_EQ(closest_to_mean(ip), pick({1}));
}

TEST(MechanismSpecTest, NamesRoundTrip) {
  std::vector<MechanismSpec> specs{
      mech::LeftmostClosest{}, mech::Dictatorship{2}, mech::TwoExtremes{},
      mech::Median{},          mech::RandomDictatorship{},
      mech::Wpv{{Q("1/4"), Q("3/4")}}, mech::ClosestToMean{}};
  for (const auto& s : specs) EXPECT_EQ(parse_mechanism(mechanism_name(s)), s);
  EXPECT_EQ(parse_mechanism("dictator:1"), MechanismSpec(mech::Dictatorship{0}));
  EXPECT_EQ(parse_mechanism("wpv:0.5,0.5"),
            MechanismSpec(mech::Wpv{{Q("1/2"), Q("1/2")}}));
  for (const char* bad : {"dictator:0", "dictator:", "dictator:x", "wpv:", "wpv:1,",
                          "median2", ""}) {
    EXPECT_THROW(parse_mechanism(bad), ParseError) << bad;
  }
}

TEST(MechanismSpecTest, FacilityCountMismatch) {
  Instance one = line({"1"}, {"0"}, 1);
  Instance two = line({"1"}, {"0"}, 2);
  EXPECT_THROW(apply_mechanism(mech::TwoExtremes{}, one), MechanismMismatch);
  EXPECT_THROW(apply_mechanism(mech::Median{}, two), MechanismMismatch);
  EXPECT_NO_THROW(apply_mechanism(mech::TwoExtremes{}, two));
}

// Properties over random instances, including a coarse grid where ties and
// coincident locations are common.
class MechanismPropertyTest : public ::testing::TestWithParam<std::int64_t> {
 protected:
  RandomFamily family(int k) const {
    RandomFamily f;
    f.n = 4;
    f.m = 4;
    f.k = k;
    f.seed = 19;
    f.hi = 4;
    f.grid_denominator = GetParam();
    return f;
  }
};

TEST_P(MechanismPropertyTest, MatchesReferenceTieRules) {
  for (std::uint64_t idx = 0; idx < 300; ++idx) {
    Instance one = random_line_instance(family(1), idx);
    Instance two = random_line_instance(family(2), idx);
    std::vector<Scalar> xs;
    for (const auto& a : one.agents()) xs.push_back(coordinate(a));
    std::sort(xs.begin(), xs.end());
    EXPECT_EQ(leftmost_closest(one), pick({reference_closest(one, xs.front(), false)}));
    EXPECT_EQ(median(one), pick({reference_closest(one, xs[1], false)}));

    std::vector<Scalar> ys;
    for (const auto& a : two.agents()) ys.push_back(coordinate(a));
    std::sort(ys.begin(), ys.end());
    Selection s = two_extremes(two);
    EXPECT_EQ(s, pick({reference_closest(two, ys.front(), true),
                       reference_closest(two, ys.back(), false)}));
    // Each facility is exactly at minimum distance from its extreme agent.
    for (const auto& c : two.candidates()) {
      EXPECT_LE(abs_diff(cand(two, s, 0), ys.front()), abs_diff(coordinate(c), ys.front()));
      EXPECT_LE(abs_diff(cand(two, s, 1), ys.back()), abs_diff(coordinate(c), ys.back()));
    }
  }
}

TEST_P(MechanismPropertyTest, LeftmostIsDictatorshipOfLeftmostAgentWithoutTies) {
  int tie_free = 0;
  for (std::uint64_t idx = 0; idx < 300; ++idx) {
    Instance inst = random_line_instance(family(1), idx);
    std::size_t left = 0;
    for (std::size_t i = 1; i < inst.num_agents(); ++i) {
      if (coordinate(inst.agents()[i]) < coordinate(inst.agents()[left])) left = i;
    }
    std::vector<Scalar> d;
    for (const auto& c : inst.candidates()) d.push_back(inst.distance(inst.agents()[left], c));
    std::sort(d.begin(), d.end());
    if (std::adjacent_find(d.begin(), d.end()) != d.end()) continue;
    ++tie_free;
    EXPECT_EQ(leftmost_closest(inst), dictatorship(inst, left));
  }
  EXPECT_GT(tie_free, 0);
}

TEST_P(MechanismPropertyTest, OutcomesAreValid) {
  std::vector<MechanismSpec> specs{mech::LeftmostClosest{}, mech::Dictatorship{3},
                                   mech::Median{}, mech::RandomDictatorship{},
                                   mech::Wpv{{Q("1/8"), Q("1/4"), Q("1/8"), Q("1/2")}},
                                   mech::ClosestToMean{}};
  for (std::uint64_t idx = 0; idx < 100; ++idx) {
    Instance one = random_line_instance(family(1), idx);
    for (const auto& s : specs) {
      EXPECT_NO_THROW(validate_outcome(one, apply_mechanism(s, one)));
    }
    Instance two = random_line_instance(family(2), idx);
    EXPECT_NO_THROW(validate_outcome(two, apply_mechanism(mech::TwoExtremes{}, two)));
  }
}

INSTANTIATE_TEST_SUITE_P(Grids, MechanismPropertyTest,
                         ::testing::Values(std::int64_t{2}, std::int64_t{1000000}),
                         [](const auto& info) {
                           return "denominator" + std::to_string(info.param);
                         });

}  // namespace
}  // namespace flg
