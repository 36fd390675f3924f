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

#include "geomech/mechanisms.hpp"

#include <stdexcept>

namespace geomech {

namespace {

bool in_unit_interval(const Rational& r) { return r >= 0 && r <= 1; }

}  // namespace

SelectionDistribution::SelectionDistribution(std::vector<Rational> probs,
                                             Rational abstain)
    : probs_(std::move(probs)), abstain_(std::move(abstain)) {
  Rational total = abstain_;
  if (!in_unit_interval(abstain_)) {
    throw std::invalid_argument("abstention mass outside [0, 1]");
  }
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (!in_unit_interval(probs_[i])) {
      throw std::invalid_argument("probability of agent " +
                                  std::to_string(i + 1) + " outside [0, 1]");
    }
    total += probs_[i];
  }
  if (total != 1) {
    throw std::invalid_argument("probabilities and abstention sum to " +
                                to_string(total) + ", not 1");
  }
}

SelectionDistribution SelectionDistribution::with_remainder(
    std::vector<Rational> probs) {
  Rational rest = 1;
  for (const Rational& p : probs) rest -= p;
  return SelectionDistribution(std::move(probs), std::move(rest));
}

std::vector<double> SelectionDistribution::float_probs() const {
  std::vector<double> out;
  out.reserve(probs_.size());
  for (const Rational& p : probs_) out.push_back(to_double(p));
  return out;
}

SelectionDistribution geometric(const InfluentialSet& set, std::size_t n) {
  std::vector<Rational> probs(n);
  const std::size_t m = set.size();
  for (std::size_t j = 0; j < m; ++j) {
    // Member at 0-based rank j is s_{j+1}: 1/2^(m-(j+1)+1) = 1/2^(m-j).
    probs[set.members[j].agent.index()] =
        inverse_power_of_two(static_cast<unsigned>(m - j));
  }
  return SelectionDistribution(std::move(probs),
                               inverse_power_of_two(static_cast<unsigned>(m)));
}

SelectionDistribution geometric(const Dag& dag) {
  return geometric(influential_set(dag), dag.size());
}

SelectionDistribution uniform(const Dag& dag) {
  const Rational share(BigInt(1), BigInt(dag.size()));
  return SelectionDistribution(std::vector<Rational>(dag.size(), share), 0);
}

SelectionDistribution optimal_non_ic(const Dag& dag) {
  std::vector<Rational> probs(dag.size());
  probs[most_influential(dag).index()] = 1;
  return SelectionDistribution(std::move(probs), 0);
}

std::optional<Mechanism> mechanism_by_name(std::string_view name) {
  if (name == "geometric") return Mechanism(static_cast<SelectionDistribution (*)(const Dag&)>(&geometric));
  if (name == "uniform") return Mechanism(&uniform);
  if (name == "optimal-non-ic") return Mechanism(&optimal_non_ic);
  return std::nullopt;
}

std::vector<std::string_view> mechanism_names() {
  return {"geometric", "uniform", "optimal-non-ic"};
}

RatioReport expected_ratio(const ProgenyTable& table,
                           const SelectionDistribution& dist) {
  if (dist.size() != table.size()) {
    throw std::invalid_argument(
        "distribution covers " + std::to_string(dist.size()) +
        " agents but the graph has " + std::to_string(table.size()));
  }
  RatioReport report;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const Agent a = Agent::from_index(i);
    if (dist.prob(a) != 0) report.expected_progeny += dist.prob(a) * table.count(a);
  }
  report.max_progeny = table.max_count();
  report.ratio = report.expected_progeny / report.max_progeny;
  return report;
}

RatioReport expected_ratio(const Dag& dag, const SelectionDistribution& dist) {
  return expected_ratio(progeny(dag), dist);
}

}  // namespace geomech
