// Copyright 2026 The geomech Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Selection mechanisms: functions from a reported graph to a probability
// distribution over agents, with explicit mass for selecting nobody.

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "geomech/dag.hpp"
#include "geomech/influence.hpp"
#include "geomech/progeny.hpp"
#include "geomech/rational.hpp"

namespace geomech {

class SelectionDistribution {
 public:
  /// Throws std::invalid_argument unless every probability and the
  /// abstention mass lie in [0, 1] and they sum to exactly 1.
  SelectionDistribution(std::vector<Rational> probs, Rational abstain);

  /// Abstention takes whatever mass the probabilities leave over.
  static SelectionDistribution with_remainder(std::vector<Rational> probs);

  std::size_t size() const { return probs_.size(); }
  const Rational& prob(Agent a) const { return probs_.at(a.index()); }
  const Rational& abstain() const { return abstain_; }
  std::span<const Rational> probs() const { return probs_; }

  std::vector<double> float_probs() const;

  friend bool operator==(const SelectionDistribution&,
                         const SelectionDistribution&) = default;

 private:
  std::vector<Rational> probs_;
  Rational abstain_;
};

using Mechanism = std::function<SelectionDistribution(const Dag&)>;

/// s_j receives 1/2^(m-j+1); everyone else 0; abstention 1/2^m.
SelectionDistribution geometric(const Dag& dag);
SelectionDistribution geometric(const InfluentialSet& set, std::size_t n);

/// 1/n to every agent.
SelectionDistribution uniform(const Dag& dag);

/// Probability 1 on the ≻-maximum progeny agent. Not incentive compatible.
SelectionDistribution optimal_non_ic(const Dag& dag);

/// Names accepted by the CLI: "geometric", "uniform", "optimal-non-ic".
std::optional<Mechanism> mechanism_by_name(std::string_view name);
std::vector<std::string_view> mechanism_names();

struct RatioReport {
  Rational expected_progeny;
  std::uint32_t max_progeny = 0;
  Rational ratio;
};

/// Expected progeny of the selected agent over p*, the ≻-maximum progeny.
/// Throws std::invalid_argument if `dist` does not cover exactly the
/// graph's agents.
RatioReport expected_ratio(const Dag& dag, const SelectionDistribution& dist);
RatioReport expected_ratio(const ProgenyTable& table,
                           const SelectionDistribution& dist);

}  // namespace geomech
