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

// Influential nodes and the influential set.
//
// Agent i is influential when, after deleting its own out-edges, it holds
// the ≻-maximum progeny, where (p_i, i) ≻ (p_j, j) iff p_i > p_j, or
// p_i == p_j and i < j.

#include <cstdint>
#include <optional>
#include <vector>

#include "geomech/dag.hpp"
#include "geomech/progeny.hpp"

namespace geomech {

constexpr bool precedes(std::uint64_t p_i, Agent i, std::uint64_t p_j, Agent j) {
  return p_i > p_j || (p_i == p_j && i.id < j.id);
}

struct InfluentialMember {
  Agent agent;
  std::uint32_t progeny;

  friend bool operator==(const InfluentialMember&, const InfluentialMember&) = default;
};

/// Influential nodes s_1 ≻ s_2 ≻ ... ≻ s_m, keyed by their progeny in the
/// graph they were computed from. s_1 is the most influential node.
struct InfluentialSet {
  std::vector<InfluentialMember> members;

  std::size_t size() const { return members.size(); }
  bool contains(Agent a) const { return rank(a).has_value(); }
  /// 0-based position of `a` (s_{rank+1}), if influential.
  std::optional<std::size_t> rank(Agent a) const;
  std::vector<Agent> agents() const;

  friend bool operator==(const InfluentialSet&, const InfluentialSet&) = default;
};

/// Direct evaluation: delete i's out-edges, recompute every progeny, and
/// test whether i is the ≻-maximum. Throws GraphError(kUnknownAgent).
bool is_influential(const Dag& dag, Agent i);

/// All influential nodes in ≻ order. Prunes agents that cannot be
/// influential using the closure of `dag`, then confirms every survivor
/// with is_influential.
InfluentialSet influential_set(const Dag& dag);
InfluentialSet influential_set(const Dag& dag, const ProgenyTable& table);

/// Runs is_influential on every agent with no pruning. O(n) closures.
InfluentialSet influential_set_exhaustive(const Dag& dag);

Agent most_influential(const Dag& dag);

}  // namespace geomech
