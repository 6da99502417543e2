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

#ifndef FLG_TESTS_TEST_UTIL_HPP
#define FLG_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "flg/core.hpp"
#include "flg/instances.hpp"

namespace flg::testing {

inline Scalar Q(const char* text) { return parse_scalar(text); }

inline Instance line(std::vector<const char*> agents,
                     std::vector<const char*> candidates, int k = 1) {
  std::vector<Scalar> a, c;
  for (auto* s : agents) a.push_back(Q(s));
  for (auto* s : candidates) c.push_back(Q(s));
  return Instance::on_line(a, c, k);
}

inline Selection pick(std::vector<std::size_t> facilities) {
  return Selection{std::move(facilities)};
}

inline PaperConstruction construction(ConstructionKind kind, const char* eps,
                                      int n = 4, const char* far = "1000") {
  PaperConstruction c;
  c.kind = kind;
  c.epsilon = Q(eps);
  c.far_point = Q(far);
  c.n = n;
  return c;
}

// Small line family with a coarse grid so ties and coincident agents show
// up often.
inline RandomFamily coarse_line_family(int n, int m, int k,
                                       std::uint64_t seed) {
  RandomFamily f;
  f.kind = FamilyKind::kLineUniform;
  f.n = n;
  f.m = m;
  f.k = k;
  f.seed = seed;
  f.lo = 0;
  f.hi = 4;
  f.grid_denominator = 2;
  return f;
}

}  // namespace flg::testing

#endif  // FLG_TESTS_TEST_UTIL_HPP
