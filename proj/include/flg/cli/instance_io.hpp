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

// JSON instance files and exact-number encoding.
//
// Line:   {"space": "line", "agents": ["0.9", "11/10"],
//          "candidates": ["0", "2"], "k": 1}
// Metric: {"space": "metric", "points": 3,
//          "matrix": [["0","5","4"], ["5","0","1"], ["4","1","0"]],
//          "agents": [1], "candidates": [2, 3], "k": 1}
//
// Metric point indices are 1-based in files. Numbers are strings (decimal
// or "p/q"); JSON integers are also accepted. Unknown keys are rejected.

#ifndef FLG_CLI_INSTANCE_IO_HPP
#define FLG_CLI_INSTANCE_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "flg/core.hpp"

namespace flg::cli {

using Json = nlohmann::ordered_json;

// All throw ParseError on malformed input.
Instance instance_from_json(const Json& doc);
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);

Json instance_to_json(const Instance& instance);
std::string serialize_instance(const Instance& instance);

// {"exact": "1/3", "decimal": "0.333333333333"}
Json exact_json(const Scalar& value);
// Rational string on the line, 1-based point index in a metric.
Json location_json(const Location& location);

}  // namespace flg::cli

#endif  // FLG_CLI_INSTANCE_IO_HPP
