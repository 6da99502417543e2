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

#ifndef FLG_SCALAR_HPP
#define FLG_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flg {

// Exact rational number. GMP keeps every value canonical (lowest terms,
// positive denominator) after each arithmetic operation.
using Scalar = mpq_class;

// Parses "3", "-0.25", "1.5e-3" or "7/3" exactly. Throws ParseError.
Scalar parse_scalar(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_rational_string(const Scalar& value);

// Fixed-point rendering rounded half away from zero, trailing zeros trimmed.
std::string to_decimal_string(const Scalar& value, int digits = 12);

inline Scalar abs_diff(const Scalar& a, const Scalar& b) {
  Scalar d = a - b;
  if (sgn(d) < 0) d = -d;
  return d;
}

}  // namespace flg

#endif  // FLG_SCALAR_HPP
