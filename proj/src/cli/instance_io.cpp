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

#include "flg/cli/instance_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "flg/errors.hpp"

namespace flg::cli {
namespace {

Scalar number_from_json(const Json& v, std::string_view what) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return parse_scalar(v.dump());
  throw ParseError(std::string(what) +
                   " must be a decimal string, \"p/q\" string or integer");
}

std::size_t index_from_json(const Json& v, std::size_t points,
                            std::string_view what) {
  if (!v.is_number_integer()) {
    throw ParseError(std::string(what) + " must be an integer point index");
  }
  auto i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > points) {
    throw ParseError(std::string(what) + " index out of range 1.." +
                     std::to_string(points));
  }
  return static_cast<std::size_t>(i - 1);
}

const Json& require(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& require_array(const Json& doc, const char* key) {
  const Json& v = require(doc, key);
  if (!v.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  return v;
}

void reject_unknown(const Json& doc, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.contains(key)) {
      throw ParseError("unknown field \"" + key + "\"");
    }
  }
}

}  // namespace

Instance instance_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("instance file must be a JSON object");
  const Json& space = require(doc, "space");
  if (!space.is_string()) throw ParseError("\"space\" must be a string");
  const Json& k_json = require(doc, "k");
  if (!k_json.is_number_integer()) throw ParseError("\"k\" must be an integer");
  const int k = k_json.get<int>();

  try {
    if (space == "line") {
      reject_unknown(doc, {"space", "agents", "candidates", "k"});
      std::vector<Scalar> agents, candidates;
      for (const auto& v : require_array(doc, "agents")) {
        agents.push_back(number_from_json(v, "agent location"));
      }
      for (const auto& v : require_array(doc, "candidates")) {
        candidates.push_back(number_from_json(v, "candidate location"));
      }
      return Instance::on_line(agents, candidates, k);
    }
    if (space == "metric") {
      reject_unknown(doc, {"space", "points", "matrix", "agents", "candidates", "k"});
      const Json& points_json = require(doc, "points");
      if (!points_json.is_number_integer() || points_json.get<long long>() < 1) {
        throw ParseError("\"points\" must be a positive integer");
      }
      const auto points = points_json.get<std::size_t>();
      const Json& rows = require_array(doc, "matrix");
      if (rows.size() != points) throw ParseError("matrix row count != points");
      std::vector<std::vector<Scalar>> matrix;
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != points) {
          throw ParseError("matrix rows must have \"points\" entries");
        }
        auto& out = matrix.emplace_back();
        for (const auto& v : row) out.push_back(number_from_json(v, "distance"));
      }
      std::vector<std::size_t> agents, candidates;
      for (const auto& v : require_array(doc, "agents")) {
        agents.push_back(index_from_json(v, points, "agent"));
      }
      for (const auto& v : require_array(doc, "candidates")) {
        candidates.push_back(index_from_json(v, points, "candidate"));
      }
      return Instance::on_metric(FiniteMetric(matrix), agents, candidates, k);
    }
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
  throw ParseError("\"space\" must be \"line\" or \"metric\"");
}

Instance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(doc);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

Json location_json(const Location& location) {
  if (const auto* x = std::get_if<Scalar>(&location)) {
    return to_rational_string(*x);
  }
  return std::get<PointId>(location).index + 1;
}

Json instance_to_json(const Instance& instance) {
  Json doc;
  Json agents = Json::array();
  Json candidates = Json::array();
  for (const auto& a : instance.agents()) agents.push_back(location_json(a));
  for (const auto& c : instance.candidates()) candidates.push_back(location_json(c));
  if (instance.on_line()) {
    doc["space"] = "line";
  } else {
    const auto& metric = std::get<FiniteMetric>(instance.space());
    doc["space"] = "metric";
    doc["points"] = metric.size();
    Json rows = Json::array();
    for (const auto& row : metric.matrix()) {
      Json r = Json::array();
      for (const auto& d : row) r.push_back(to_rational_string(d));
      rows.push_back(std::move(r));
    }
    doc["matrix"] = std::move(rows);
  }
  doc["agents"] = std::move(agents);
  doc["candidates"] = std::move(candidates);
  doc["k"] = instance.k();
  return doc;
}

std::string serialize_instance(const Instance& instance) {
  return instance_to_json(instance).dump(2) + "\n";
}

Json exact_json(const Scalar& value) {
  Json j;
  j["exact"] = to_rational_string(value);
  j["decimal"] = to_decimal_string(value);
  return j;
}

}  // namespace flg::cli
