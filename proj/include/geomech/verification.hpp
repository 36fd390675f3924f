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

// Brute-force verifiers for incentive compatibility, fairness, the root
// property, and the structural observations about influential sets.
//
// Every verifier takes the mechanism as a parameter so the same harness
// certifies IC mechanisms and exposes non-IC baselines. Results record
// whether misreports were enumerated exhaustively or sampled.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "geomech/dag.hpp"
#include "geomech/mechanisms.hpp"
#include "geomech/rational.hpp"

namespace geomech {

/// 2^20 subsets: exhaustive enumeration up to out-degree 20.
inline constexpr std::uint64_t kDefaultSubsetCap = std::uint64_t{1} << 20;

enum class EnumerationMode { kExhaustive, kSampled };

/// Calls `visit(followees)` for strict subsets of agent i's out-edges:
/// all of them when 2^outdeg - 1 <= cap, otherwise the empty set plus `cap`
/// seeded random subsets. Stops early when `visit` returns true.
/// Returns the mode used and sets `*visited` to the number of calls.
EnumerationMode for_each_misreport(
    const Dag& dag, Agent i, std::uint64_t subset_cap, std::uint64_t seed,
    const std::function<bool(std::span<const Agent>)>& visit,
    std::uint64_t* visited = nullptr);

struct IcViolation {
  Agent agent;
  Rational truthful_prob;
  std::vector<Agent> misreport;  // declared followees, a strict subset
  Rational misreport_prob;
};

struct IcCheck {
  std::optional<IcViolation> violation;
  EnumerationMode mode = EnumerationMode::kExhaustive;
  std::uint64_t subsets_checked = 0;
};

IcCheck check_ic(const Mechanism& mechanism, const Dag& dag, Agent i,
                 std::uint64_t subset_cap = kDefaultSubsetCap,
                 std::uint64_t seed = 0);

struct IcReport {
  std::vector<IcViolation> violations;
  std::uint64_t subset_cap = kDefaultSubsetCap;
  std::uint64_t subsets_checked = 0;
  std::size_t sampled_agents = 0;  // agents whose subsets were sampled

  bool exhaustive() const { return sampled_agents == 0; }
};

IcReport check_ic_all(const Mechanism& mechanism, const Dag& dag,
                      std::uint64_t subset_cap = kDefaultSubsetCap,
                      std::uint64_t seed = 0);

/// Re-evaluates the mechanism on the truthful and misreported graphs and
/// confirms both recorded probabilities exactly.
bool replays(const Mechanism& mechanism, const Dag& dag,
             const IcViolation& violation);

/// Influential nodes ranked below i: {j ∈ S^inf : p_i ≻ p_j}. Empty when i
/// is not influential.
std::vector<Agent> influential_below(const Dag& dag, Agent i);

/// For influential i: influential_below(truth, i) ⊆ influential_below(G', i)
/// for every enumerated misreport G'. Vacuously true otherwise.
bool check_set_monotonicity(const Dag& dag, Agent i,
                            std::uint64_t subset_cap = kDefaultSubsetCap,
                            std::uint64_t seed = 0);

struct FairnessSample {
  Dag base;
  Dag mutated;
  Agent pivot;  // s_1 of both graphs
};

class FairnessPreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Throws FairnessPreconditionError unless both graphs share n, the ordered
/// influential set, the pivot as s_1, and the pivot's progeny subgraph.
void validate_fairness_sample(const FairnessSample& sample);

/// Adds or deletes one to three edges with both endpoints outside P_{s_1}.
/// Returns nothing when no such edit exists or the edit changed the
/// influential set or s_1's progeny subgraph.
std::optional<FairnessSample> mutate_outside(const Dag& dag, std::uint64_t seed);

struct FairnessCheck {
  Rational base_prob;
  Rational mutated_prob;
  bool fair() const { return base_prob == mutated_prob; }
};

/// Validates the sample, then compares x_{s_1} in both graphs.
FairnessCheck evaluate_fairness(const Mechanism& mechanism,
                                const FairnessSample& sample);

bool check_fairness(const Mechanism& mechanism, const FairnessSample& sample);

struct FairnessFailure {
  FairnessSample sample;
  FairnessCheck check;
};

struct FairnessReport {
  std::uint64_t attempts = 0;
  std::uint64_t accepted = 0;
  std::uint64_t discarded = 0;
  std::vector<FairnessFailure> failures;
};

/// Draws base graphs from `source(index)` and mutations seeded from `seed`
/// until `target_accepted` samples are accepted or `max_attempts` is hit.
FairnessReport run_fairness(const Mechanism& mechanism,
                            const std::function<Dag(std::uint64_t)>& source,
                            std::uint64_t target_accepted,
                            std::uint64_t max_attempts, std::uint64_t seed);

/// True iff every agent outside the influential set gets probability 0.
bool check_root_property(const Mechanism& mechanism, const Dag& dag);

struct ObservationReport {
  bool path_nesting = true;        // s_b ∈ P_{s_a} for all a < b
  bool sink_maximum = true;        // s_1 has no out-edges and ≻-max progeny
  bool non_influential_closed = true;  // misreports never make i influential
  std::uint64_t misreports_checked = 0;
  bool exhaustive = true;

  bool all() const { return path_nesting && sink_maximum && non_influential_closed; }
};

ObservationReport check_observations(const Dag& dag,
                                     std::uint64_t subset_cap = 256,
                                     std::uint64_t seed = 0);

}  // namespace geomech
