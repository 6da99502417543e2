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

#ifndef FLG_INSTANCES_HPP
#define FLG_INSTANCES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flg/core.hpp"

namespace flg {

// Named lower-bound and tightness constructions.
//
//   single-lb-I      agents (1-e, 1+e), candidates (0, 2), k=1
//   single-lb-I'     agents (1-e, 3),   candidates (0, 2), k=1
//   two-lb-I         agents (1-e, 1+e, L), candidates (0, 2, L), k=2
//   two-lb-I'        agents (1-e, 3, L),   candidates (0, 2, L), k=2
//   wpv-remark       agents (1, 3), candidates (e, 2, 4-e), k=1
//   example-1        agents (1, 4/3 x (n-2), 2), candidates (2/3+e, 4/3, 2), k=2
//   median-context   agents (0, 1, ..., n-1) for odd n,
//                    candidates (0, (n-1)/2 + e, n-1), k=1
enum class ConstructionKind {
  kSingleLbI,
  kSingleLbIPrime,
  kTwoLbI,
  kTwoLbIPrime,
  kWpvRemark,
  kExample1,
  kMedianContext,
};

inline constexpr long kDefaultFarPoint = 1000;

struct PaperConstruction {
  ConstructionKind kind = ConstructionKind::kSingleLbI;
  Scalar epsilon{1, 10};
  Scalar far_point{kDefaultFarPoint};
  int n = 4;
};

// Throws InvalidArgument when parameters violate the construction's range.
Instance build_paper_instance(const PaperConstruction& construction);

std::string construction_name(ConstructionKind kind);
// Accepts "single-lb-I'" and the ASCII-safe "single-lb-Ip". Throws ParseError.
ConstructionKind parse_construction(std::string_view name);

enum class FamilyKind { kLineUniform, kMetricClosure };

// Seeded random instance family. Values are drawn uniformly from the grid
// {lo, lo + 1/grid_denominator, ..., hi}: line coordinates for the line
// family, raw edge weights for the metric family.
struct RandomFamily {
  FamilyKind kind = FamilyKind::kLineUniform;
  int n = 5;
  int m = 4;
  int k = 1;
  std::uint64_t seed = 0;
  Scalar lo{0};
  Scalar hi{10};
  std::int64_t grid_denominator = 1'000'000;
};

Instance random_line_instance(const RandomFamily& family, std::uint64_t index);
Instance random_metric_instance(const RandomFamily& family, std::uint64_t index);
// Dispatches on family.kind.
Instance random_instance(const RandomFamily& family, std::uint64_t index);

// All-pairs shortest-path closure of a symmetric nonnegative matrix.
std::vector<std::vector<Scalar>> metric_closure(
    std::vector<std::vector<Scalar>> weights);

std::string family_name(FamilyKind kind);
FamilyKind parse_family(std::string_view name);

}  // namespace flg

#endif  // FLG_INSTANCES_HPP
