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

// Deterministic graph families: seeded random ensembles, the upper-bound
// construction and its worst-case variants, and the ratio-tightness family.

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "geomech/dag.hpp"

namespace geomech {

/// Seeded generator with platform-independent draws. std::mt19937_64 output
/// is fixed by the standard; the distribution helpers below avoid the
/// implementation-defined std:: distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p) { return p >= 1.0 || uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent stream seed for item `index` of an ensemble.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

// Identity order is the topological order: each edge (i, j), i > j, is kept
// independently with probability p.
Dag gnp_dag(std::size_t n, double p, std::uint64_t seed);

// Agent 1 is a root; every later agent i follows a uniform choice among
// {nobody, 1, ..., i-1}, so the result is a forest.
Dag random_forest(std::size_t n, std::uint64_t seed);

// n follows n-1, ..., 2 follows 1.
Dag chain(std::size_t n);

// n = 2k-1. Agents 1..k-1 follow k; k -> k+1 -> ... -> 2k-1. p_i = i for
// i >= k and the influential set is {2k-1, ..., k}.
Dag upper_bound_graph(std::size_t k);

// upper_bound_graph(k) with the out-edges of agents j..2k-2 deleted.
// Requires k <= j <= 2k-1.
Dag worst_case_graph(std::size_t k, std::size_t j);

// Agent 1 is followed by agent 2 and k-1 leaves; agent 2 is followed by k
// leaves. n = 2k+1, p_1 = 2k+1, p_2 = k+1, influential set [1, 2].
Dag tightness_family(std::size_t k);

// Seven agents: 2->1, 5->1, 3->2, 4->2, 7->3, 6->5. Influential set
// [(1, 7), (2, 4)]; agent 2 profits under optimal_non_ic by hiding 2->1.
Dag witness_graph();

// Eight agents realizing m = 2, p_{s1} = 8, p_{s2} = 6: agent 2 and agent 3
// follow 1, agents 4..8 follow 2.
Dag two_leader_graph();

enum class Family {
  kGnpDag,
  kRandomForest,
  kChain,
  kUpperBound,
  kWorstCase,
  kTightness,
  kWitness,
  kTwoLeader,
};

std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

struct EnsembleSpec {
  Family family = Family::kGnpDag;
  std::size_t n = 1;
  double p = 0.0;
  std::size_t k = 2;
  std::size_t j = 2;
  std::uint64_t seed = 0;
};

/// Item `index` of the ensemble described by `spec`. Deterministic families
/// ignore the index; random ones draw from split_seed(spec.seed, index).
/// Throws std::invalid_argument for out-of-range parameters.
Dag generate(const EnsembleSpec& spec, std::uint64_t index = 0);

}  // namespace geomech
