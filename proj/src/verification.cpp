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

#include "geomech/verification.hpp"

#include <algorithm>

#include "geomech/generators.hpp"
#include "geomech/influence.hpp"
#include "geomech/progeny.hpp"

namespace geomech {

EnumerationMode for_each_misreport(
    const Dag& dag, Agent i, std::uint64_t subset_cap, std::uint64_t seed,
    const std::function<bool(std::span<const Agent>)>& visit,
    std::uint64_t* visited) {
  const auto out = dag.out_edges(i);
  const std::size_t degree = out.size();
  std::vector<Agent> subset;
  subset.reserve(degree);
  std::uint64_t calls = 0;
  const auto emit = [&]() {
    ++calls;
    return visit(subset);
  };

  const bool exhaustive =
      degree < 64 && ((std::uint64_t{1} << degree) - 1) <= subset_cap;
  if (exhaustive) {
    const std::uint64_t full = (std::uint64_t{1} << degree) - 1;
    for (std::uint64_t mask = 0; mask < full; ++mask) {
      subset.clear();
      for (std::size_t b = 0; b < degree; ++b) {
        if ((mask >> b) & 1U) subset.push_back(out[b].followee);
      }
      if (emit()) break;
    }
  } else {
    Rng rng(split_seed(seed, i.id));
    bool stop = emit();  // empty report first
    for (std::uint64_t draw = 0; draw < subset_cap && !stop; ++draw) {
      do {
        subset.clear();
        for (std::size_t b = 0; b < degree; ++b) {
          if (rng.next() >> 63) subset.push_back(out[b].followee);
        }
      } while (subset.size() == degree);
      stop = emit();
    }
  }
  if (visited) *visited = calls;
  return exhaustive ? EnumerationMode::kExhaustive : EnumerationMode::kSampled;
}

IcCheck check_ic(const Mechanism& mechanism, const Dag& dag, Agent i,
                 std::uint64_t subset_cap, std::uint64_t seed) {
  if (!dag.contains(i)) {
    throw GraphError(GraphErrc::kUnknownAgent,
                     "unknown agent " + std::to_string(i.id));
  }
  IcCheck result;
  const Rational truthful = mechanism(dag).prob(i);
  result.mode = for_each_misreport(
      dag, i, subset_cap, seed,
      [&](std::span<const Agent> followees) {
        const Rational lied = mechanism(apply_report(dag, i, followees)).prob(i);
        if (lied > truthful) {
          result.violation = IcViolation{
              i, truthful, std::vector<Agent>(followees.begin(), followees.end()),
              lied};
          return true;
        }
        return false;
      },
      &result.subsets_checked);
  return result;
}

IcReport check_ic_all(const Mechanism& mechanism, const Dag& dag,
                      std::uint64_t subset_cap, std::uint64_t seed) {
  IcReport report;
  report.subset_cap = subset_cap;
  for (std::size_t idx = 0; idx < dag.size(); ++idx) {
    IcCheck check = check_ic(mechanism, dag, Agent::from_index(idx), subset_cap, seed);
    report.subsets_checked += check.subsets_checked;
    if (check.mode == EnumerationMode::kSampled) ++report.sampled_agents;
    if (check.violation) report.violations.push_back(std::move(*check.violation));
  }
  return report;
}

bool replays(const Mechanism& mechanism, const Dag& dag,
             const IcViolation& violation) {
  if (!dag.contains(violation.agent)) return false;
  if (violation.misreport.size() >= dag.out_degree(violation.agent)) return false;
  const Rational truthful = mechanism(dag).prob(violation.agent);
  const Dag lied_graph = apply_report(dag, violation.agent, violation.misreport);
  const Rational lied = mechanism(lied_graph).prob(violation.agent);
  return truthful == violation.truthful_prob &&
         lied == violation.misreport_prob && lied > truthful;
}

std::vector<Agent> influential_below(const Dag& dag, Agent i) {
  const InfluentialSet set = influential_set(dag);
  const auto rank = set.rank(i);
  std::vector<Agent> below;
  if (!rank) return below;
  for (std::size_t r = *rank + 1; r < set.size(); ++r) {
    below.push_back(set.members[r].agent);
  }
  std::sort(below.begin(), below.end());
  return below;
}

bool check_set_monotonicity(const Dag& dag, Agent i, std::uint64_t subset_cap,
                            std::uint64_t seed) {
  const InfluentialSet set = influential_set(dag);
  if (!set.contains(i)) return true;
  const std::vector<Agent> truthful = influential_below(dag, i);
  bool holds = true;
  for_each_misreport(dag, i, subset_cap, seed, [&](std::span<const Agent> followees) {
    const std::vector<Agent> lied =
        influential_below(apply_report(dag, i, followees), i);
    holds = std::includes(lied.begin(), lied.end(), truthful.begin(), truthful.end());
    return !holds;
  });
  return holds;
}

void validate_fairness_sample(const FairnessSample& sample) {
  if (sample.base.size() != sample.mutated.size()) {
    throw FairnessPreconditionError("fairness sample graphs differ in size");
  }
  const InfluentialSet base_set = influential_set(sample.base);
  const InfluentialSet mutated_set = influential_set(sample.mutated);
  if (base_set != mutated_set) {
    throw FairnessPreconditionError("fairness sample influential sets differ");
  }
  if (base_set.members.front().agent != sample.pivot) {
    throw FairnessPreconditionError("fairness sample pivot is not s_1");
  }
  const ProgenySubgraph a = progeny_subgraph(sample.base, sample.pivot);
  const ProgenySubgraph b = progeny_subgraph(sample.mutated, sample.pivot);
  if (a.original != b.original || !(a.graph == b.graph)) {
    throw FairnessPreconditionError("fairness sample pivot subgraphs differ");
  }
}

std::optional<FairnessSample> mutate_outside(const Dag& dag, std::uint64_t seed) {
  const Agent pivot = most_influential(dag);
  const ProgenySubgraph inside = progeny_subgraph(dag, pivot);
  std::vector<char> in_pivot(dag.size(), 0);
  for (Agent a : inside.original) in_pivot[a.index()] = 1;
  std::vector<std::uint32_t> outside;
  for (std::size_t v = 0; v < dag.size(); ++v) {
    if (!in_pivot[v]) outside.push_back(static_cast<std::uint32_t>(v));
  }
  if (outside.size() < 2) return std::nullopt;

  Rng rng(seed);
  std::vector<Edge> edges(dag.edges().begin(), dag.edges().end());
  const auto is_outside_edge = [&](const Edge& e) {
    return !in_pivot[e.follower.index()] && !in_pivot[e.followee.index()];
  };
  const std::uint64_t ops = 1 + rng.below(3);
  bool changed = false;
  for (std::uint64_t op = 0; op < ops; ++op) {
    std::vector<std::size_t> removable;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (is_outside_edge(edges[k])) removable.push_back(k);
    }
    const bool remove = !removable.empty() && rng.bernoulli(0.5);
    if (remove) {
      edges.erase(edges.begin() +
                  static_cast<std::ptrdiff_t>(removable[rng.below(removable.size())]));
      changed = true;
      continue;
    }
    const Edge candidate{Agent::from_index(outside[rng.below(outside.size())]),
                         Agent::from_index(outside[rng.below(outside.size())])};
    if (candidate.follower == candidate.followee ||
        std::find(edges.begin(), edges.end(), candidate) != edges.end()) {
      continue;
    }
    edges.push_back(candidate);
    try {
      (void)Dag::from_edges(dag.size(), edges);
      changed = true;
    } catch (const GraphError&) {
      edges.pop_back();  // would close a cycle
    }
  }
  if (!changed) return std::nullopt;

  FairnessSample sample{dag, Dag::from_edges(dag.size(), std::move(edges)), pivot};
  if (sample.mutated == sample.base) return std::nullopt;
  try {
    validate_fairness_sample(sample);
  } catch (const FairnessPreconditionError&) {
    return std::nullopt;
  }
  return sample;
}

FairnessCheck evaluate_fairness(const Mechanism& mechanism,
                                const FairnessSample& sample) {
  validate_fairness_sample(sample);
  return {mechanism(sample.base).prob(sample.pivot),
          mechanism(sample.mutated).prob(sample.pivot)};
}

bool check_fairness(const Mechanism& mechanism, const FairnessSample& sample) {
  return evaluate_fairness(mechanism, sample).fair();
}

FairnessReport run_fairness(const Mechanism& mechanism,
                            const std::function<Dag(std::uint64_t)>& source,
                            std::uint64_t target_accepted,
                            std::uint64_t max_attempts, std::uint64_t seed) {
  FairnessReport report;
  while (report.accepted < target_accepted && report.attempts < max_attempts) {
    const std::uint64_t index = report.attempts++;
    const Dag base = source(index);
    auto sample = mutate_outside(base, split_seed(seed, index));
    if (!sample) {
      ++report.discarded;
      continue;
    }
    ++report.accepted;
    FairnessCheck check = evaluate_fairness(mechanism, *sample);
    if (!check.fair()) report.failures.push_back({std::move(*sample), std::move(check)});
  }
  return report;
}

bool check_root_property(const Mechanism& mechanism, const Dag& dag) {
  const SelectionDistribution dist = mechanism(dag);
  const InfluentialSet set = influential_set(dag);
  for (std::size_t idx = 0; idx < dag.size(); ++idx) {
    const Agent a = Agent::from_index(idx);
    if (dist.prob(a) != 0 && !set.contains(a)) return false;
  }
  return true;
}

ObservationReport check_observations(const Dag& dag, std::uint64_t subset_cap,
                                     std::uint64_t seed) {
  ObservationReport report;
  const ProgenyTable table = progeny_closure(dag);
  const InfluentialSet set = influential_set(dag, table);

  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (!table.in_progeny(set.members[a].agent, set.members[b].agent)) {
        report.path_nesting = false;
      }
    }
  }

  const Agent s1 = set.members.front().agent;
  if (dag.out_degree(s1) != 0) report.sink_maximum = false;
  for (std::size_t j = 0; j < dag.size(); ++j) {
    const Agent other = Agent::from_index(j);
    if (other != s1 && !precedes(table.count(s1), s1, table.count(other), other)) {
      report.sink_maximum = false;
    }
  }

  for (std::size_t idx = 0; idx < dag.size(); ++idx) {
    const Agent i = Agent::from_index(idx);
    if (set.contains(i)) continue;
    std::uint64_t visited = 0;
    const EnumerationMode mode = for_each_misreport(
        dag, i, subset_cap, seed,
        [&](std::span<const Agent> followees) {
          if (is_influential(apply_report(dag, i, followees), i)) {
            report.non_influential_closed = false;
            return true;
          }
          return false;
        },
        &visited);
    report.misreports_checked += visited;
    if (mode == EnumerationMode::kSampled) report.exhaustive = false;
  }
  return report;
}

}  // namespace geomech
