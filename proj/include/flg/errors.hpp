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

#ifndef FLG_ERRORS_HPP
#define FLG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (numbers, instance files, mechanism names).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A value violates a type invariant or an operation precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed its configured budget.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// A mechanism was applied to a space or facility count it does not support.
class MechanismMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace flg

#endif  // FLG_ERRORS_HPP
