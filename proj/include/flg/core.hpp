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

// Spaces, instances, outcomes and the two cost objectives.
//
// Indices are 0-based throughout the library. The command-line layer
// converts to and from the 1-based numbering used in files and reports.

#ifndef FLG_CORE_HPP
#define FLG_CORE_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "flg/scalar.hpp"

namespace flg {

// The real line; points are Scalar coordinates.
struct Line {
  friend bool operator==(const Line&, const Line&) = default;
};

// A finite metric given by an explicit symmetric distance matrix. The
// constructor rejects anything that is not a metric (zero diagonal,
// symmetry, nonnegativity, triangle inequality).
class FiniteMetric {
 public:
  explicit FiniteMetric(const std::vector<std::vector<Scalar>>& matrix);

  std::size_t size() const { return points_; }
  const Scalar& at(std::size_t i, std::size_t j) const;
  std::vector<std::vector<Scalar>> matrix() const;

  friend bool operator==(const FiniteMetric&, const FiniteMetric&) = default;

 private:
  std::size_t points_ = 0;
  std::vector<Scalar> entries_;  // row-major points_ x points_
};

using Space = std::variant<Line, FiniteMetric>;

struct PointId {
  std::size_t index = 0;
  friend bool operator==(const PointId&, const PointId&) = default;
  friend auto operator<=>(const PointId&, const PointId&) = default;
};

// A coordinate on the line or a point of a finite metric.
using Location = std::variant<Scalar, PointId>;

Scalar distance(const Space& space, const Location& a, const Location& b);

// Coordinate of a line location. Throws InvalidArgument for metric points.
const Scalar& coordinate(const Location& location);

class Instance {
 public:
  Instance(Space space, std::vector<Location> agents,
           std::vector<Location> candidates, int k);

  static Instance on_line(const std::vector<Scalar>& agents,
                          const std::vector<Scalar>& candidates, int k = 1);
  static Instance on_metric(FiniteMetric metric,
                            const std::vector<std::size_t>& agents,
                            const std::vector<std::size_t>& candidates,
                            int k = 1);

  const Space& space() const { return *space_; }
  bool on_line() const { return std::holds_alternative<Line>(*space_); }
  const std::vector<Location>& agents() const { return agents_; }
  const std::vector<Location>& candidates() const { return candidates_; }
  std::size_t num_agents() const { return agents_.size(); }
  std::size_t num_candidates() const { return candidates_.size(); }
  int k() const { return k_; }

  Scalar distance(const Location& a, const Location& b) const {
    return flg::distance(*space_, a, b);
  }

  // Same space, candidates and k with a different reported profile. The
  // space is shared, not copied.
  Instance with_agents(std::vector<Location> agents) const;
  // Replaces one reported location in place.
  void set_agent(std::size_t i, Location location);

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  Instance(std::shared_ptr<const Space> space, std::vector<Location> agents,
           std::vector<Location> candidates, int k);
  void validate() const;
  void check_location(const Location& location) const;

  std::shared_ptr<const Space> space_;
  std::vector<Location> agents_;
  std::vector<Location> candidates_;
  int k_ = 1;
};

// k candidate indices, duplicates allowed. Order is the mechanism's own
// facility order.
struct Selection {
  std::vector<std::size_t> facilities;

  friend bool operator==(const Selection&, const Selection&) = default;
  friend auto operator<=>(const Selection&, const Selection&) = default;
};

// Finite distribution over selections. Stored canonically: atoms sorted by
// selection, duplicates merged, zero-probability atoms dropped.
class Lottery {
 public:
  explicit Lottery(std::vector<std::pair<Selection, Scalar>> atoms);
  static Lottery point_mass(Selection selection);

  const std::vector<std::pair<Selection, Scalar>>& atoms() const {
    return atoms_;
  }
  // Probability that candidate j is among the selected facilities.
  Scalar probability_of(std::size_t candidate) const;

  friend bool operator==(const Lottery&, const Lottery&) = default;

 private:
  std::vector<std::pair<Selection, Scalar>> atoms_;
};

using Outcome = std::variant<Selection, Lottery>;

Lottery as_lottery(const Outcome& outcome);
bool is_randomized(const Outcome& outcome);

// Throws InvalidArgument if a facility index is out of range or a
// selection is empty.
void validate_outcome(const Instance& instance, const Outcome& outcome);

enum class Objective { kSocial, kMaximum };

// Distance from `where` to the closest selected facility.
Scalar cost_at(const Instance& instance, const Selection& selection,
               const Location& where);
Scalar agent_cost(const Instance& instance, const Selection& selection,
                  std::size_t agent);
Scalar social_cost(const Instance& instance, const Selection& selection);
Scalar max_cost(const Instance& instance, const Selection& selection);
Scalar objective_cost(const Instance& instance, const Selection& selection,
                      Objective objective);

Scalar expected_cost(const Instance& instance, const Lottery& lottery,
                     Objective objective);
Scalar expected_cost_at(const Instance& instance, const Lottery& lottery,
                        const Location& where);

// Deterministic cost or expectation, depending on the outcome kind.
Scalar outcome_cost(const Instance& instance, const Outcome& outcome,
                    Objective objective);
Scalar outcome_cost_at(const Instance& instance, const Outcome& outcome,
                       const Location& where);

const char* objective_name(Objective objective);

}  // namespace flg

#endif  // FLG_CORE_HPP
