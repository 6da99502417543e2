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

#include "flg/instances.hpp"

#include <array>
#include <random>
#include <utility>

#include <boost/random/uniform_int_distribution.hpp>

#include "flg/errors.hpp"

namespace flg {
namespace {

struct NamedConstruction {
  ConstructionKind kind;
  std::string_view name;
  std::string_view alias;
};

constexpr std::array<NamedConstruction, 7> kConstructions{{
    {ConstructionKind::kSingleLbI, "single-lb-I", "single-lb-I"},
    {ConstructionKind::kSingleLbIPrime, "single-lb-I'", "single-lb-Ip"},
    {ConstructionKind::kTwoLbI, "two-lb-I", "two-lb-I"},
    {ConstructionKind::kTwoLbIPrime, "two-lb-I'", "two-lb-Ip"},
    {ConstructionKind::kWpvRemark, "wpv-remark", "wpv-remark"},
    {ConstructionKind::kExample1, "example-1", "example-1"},
    {ConstructionKind::kMedianContext, "median-context", "median-context"},
}};

bool is_two_facility(ConstructionKind kind) {
  return kind == ConstructionKind::kTwoLbI ||
         kind == ConstructionKind::kTwoLbIPrime;
}

// Portable across standard libraries: mt19937_64 and seed_seq are fully
// specified, and Boost's distribution does not vary by platform.
std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t index,
                            std::uint32_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32), salt};
  return std::mt19937_64(seq);
}

class GridSampler {
 public:
  explicit GridSampler(const RandomFamily& family)
      : lo_(family.lo), denominator_(family.grid_denominator) {
    if (denominator_ <= 0) {
      throw InvalidArgument("grid denominator must be positive");
    }
    if (family.hi < family.lo) throw InvalidArgument("empty value range");
    Scalar steps = (family.hi - family.lo) * denominator_;
    if (steps.get_den() != 1 || !steps.get_num().fits_slong_p()) {
      throw InvalidArgument("value range does not align with the grid");
    }
    dist_ = boost::random::uniform_int_distribution<std::int64_t>(
        0, steps.get_num().get_si());
  }

  Scalar operator()(std::mt19937_64& engine) {
    Scalar step(static_cast<long>(dist_(engine)), denominator_);
    step.canonicalize();
    return lo_ + step;
  }

 private:
  Scalar lo_;
  long denominator_;
  boost::random::uniform_int_distribution<std::int64_t> dist_;
};

void check_family_sizes(const RandomFamily& family) {
  if (family.n < 1 || family.m < 1) {
    throw InvalidArgument("family needs n >= 1 and m >= 1");
  }
  if (family.k < 1 || family.k > 2) {
    throw InvalidArgument("family facility count must be 1 or 2");
  }
}

}  // namespace

Instance build_paper_instance(const PaperConstruction& c) {
  const Scalar& e = c.epsilon;
  const Scalar& far = c.far_point;
  if (sgn(e) <= 0 || e >= 1) {
    throw InvalidArgument("epsilon must lie in (0, 1)");
  }
  if (is_two_facility(c.kind) && far <= 10) {
    throw InvalidArgument("far point L must exceed 10");
  }

  switch (c.kind) {
    case ConstructionKind::kSingleLbI:
      return Instance::on_line({1 - e, 1 + e}, {0, 2}, 1);
    case ConstructionKind::kSingleLbIPrime:
      return Instance::on_line({1 - e, 3}, {0, 2}, 1);
    case ConstructionKind::kTwoLbI:
      return Instance::on_line({1 - e, 1 + e, far}, {0, 2, far}, 2);
    case ConstructionKind::kTwoLbIPrime:
      return Instance::on_line({1 - e, 3, far}, {0, 2, far}, 2);
    case ConstructionKind::kWpvRemark:
      return Instance::on_line({1, 3}, {e, 2, 4 - e}, 1);
    case ConstructionKind::kExample1: {
      if (c.n < 3) throw InvalidArgument("example-1 needs n >= 3");
      if (e >= Scalar(1, 3)) throw InvalidArgument("example-1 needs epsilon < 1/3");
      std::vector<Scalar> agents;
      agents.reserve(static_cast<std::size_t>(c.n));
      agents.emplace_back(1);
      for (int i = 0; i < c.n - 2; ++i) agents.emplace_back(4, 3);
      agents.emplace_back(2);
      return Instance::on_line(agents, {Scalar(2, 3) + e, Scalar(4, 3), 2}, 2);
    }
    case ConstructionKind::kMedianContext: {
      if (c.n < 1 || c.n % 2 == 0) {
        throw InvalidArgument("median-context needs odd n >= 1");
      }
      std::vector<Scalar> agents;
      for (int i = 0; i < c.n; ++i) agents.emplace_back(i);
      Scalar middle = Scalar(c.n - 1, 2) + e;
      middle.canonicalize();
      return Instance::on_line(agents, {0, middle, c.n - 1}, 1);
    }
  }
  throw InvalidArgument("unknown construction");
}

std::string construction_name(ConstructionKind kind) {
  for (const auto& c : kConstructions) {
    if (c.kind == kind) return std::string(c.name);
  }
  return "unknown";
}

ConstructionKind parse_construction(std::string_view name) {
  for (const auto& c : kConstructions) {
    if (c.name == name || c.alias == name) return c.kind;
  }
  throw ParseError("unknown construction \"" + std::string(name) + "\"");
}

Instance random_line_instance(const RandomFamily& family, std::uint64_t index) {
  if (family.kind != FamilyKind::kLineUniform) {
    throw InvalidArgument("not a line family");
  }
  check_family_sizes(family);
  auto engine = make_engine(family.seed, index, 0x6c696e65);
  GridSampler draw(family);
  std::vector<Scalar> agents, candidates;
  for (int i = 0; i < family.n; ++i) agents.push_back(draw(engine));
  for (int j = 0; j < family.m; ++j) candidates.push_back(draw(engine));
  return Instance::on_line(agents, candidates, family.k);
}

Instance random_metric_instance(const RandomFamily& family,
                                std::uint64_t index) {
  if (family.kind != FamilyKind::kMetricClosure) {
    throw InvalidArgument("not a metric family");
  }
  check_family_sizes(family);
  if (sgn(family.lo) < 0) throw InvalidArgument("edge weights must be >= 0");
  auto engine = make_engine(family.seed, index, 0x6d657472);
  GridSampler draw(family);
  const auto points = static_cast<std::size_t>(family.n + family.m);
  std::vector<std::vector<Scalar>> weights(points,
                                           std::vector<Scalar>(points, 0));
  for (std::size_t i = 0; i < points; ++i) {
    for (std::size_t j = i + 1; j < points; ++j) {
      weights[i][j] = draw(engine);
      weights[j][i] = weights[i][j];
    }
  }
  std::vector<std::size_t> agents, candidates;
  for (std::size_t i = 0; i < static_cast<std::size_t>(family.n); ++i) {
    agents.push_back(i);
  }
  for (std::size_t j = 0; j < static_cast<std::size_t>(family.m); ++j) {
    candidates.push_back(static_cast<std::size_t>(family.n) + j);
  }
  return Instance::on_metric(FiniteMetric(metric_closure(std::move(weights))),
                             agents, candidates, family.k);
}

Instance random_instance(const RandomFamily& family, std::uint64_t index) {
  return family.kind == FamilyKind::kLineUniform
             ? random_line_instance(family, index)
             : random_metric_instance(family, index);
}

std::vector<std::vector<Scalar>> metric_closure(
    std::vector<std::vector<Scalar>> d) {
  const std::size_t p = d.size();
  for (const auto& row : d) {
    if (row.size() != p) throw InvalidArgument("weight matrix is not square");
  }
  for (std::size_t l = 0; l < p; ++l) {
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        Scalar relay = d[i][l] + d[l][j];
        if (relay < d[i][j]) d[i][j] = std::move(relay);
      }
    }
  }
  return d;
}

std::string family_name(FamilyKind kind) {
  return kind == FamilyKind::kLineUniform ? "line" : "metric";
}

FamilyKind parse_family(std::string_view name) {
  if (name == "line" || name == "line-uniform") return FamilyKind::kLineUniform;
  if (name == "metric" || name == "metric-closure") {
    return FamilyKind::kMetricClosure;
  }
  throw ParseError("unknown family \"" + std::string(name) + "\"");
}

}  // namespace flg
