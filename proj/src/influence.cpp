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

#include "geomech/influence.hpp"

#include <algorithm>

namespace geomech {

namespace {

void sort_by_precedence(std::vector<InfluentialMember>& members) {
  std::sort(members.begin(), members.end(),
            [](const InfluentialMember& a, const InfluentialMember& b) {
              return precedes(a.progeny, a.agent, b.progeny, b.agent);
            });
}

// Cheap necessary conditions. Deleting i's out-edges leaves p_i and every
// p_j with i ∉ P_j unchanged, and shrinks any other p_j by at most p_i.
bool may_be_influential(const ProgenyTable& table, Agent i, Agent top) {
  if (i == top) return true;
  const std::uint64_t p_i = table.count(i);
  if (table.count(top) > 2 * p_i) return false;
  if (!table.has_sets()) return true;
  for (std::size_t j = 0; j < table.size(); ++j) {
    const Agent other = Agent::from_index(j);
    if (other == i || table.in_progeny(other, i)) continue;
    if (!precedes(p_i, i, table.count(other), other)) return false;
  }
  return true;
}

}  // namespace

std::optional<std::size_t> InfluentialSet::rank(Agent a) const {
  for (std::size_t r = 0; r < members.size(); ++r) {
    if (members[r].agent == a) return r;
  }
  return std::nullopt;
}

std::vector<Agent> InfluentialSet::agents() const {
  std::vector<Agent> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.agent);
  return out;
}

bool is_influential(const Dag& dag, Agent i) {
  const ProgenyTable after = progeny(remove_out_edges(dag, i));
  return after.argmax() == i;
}

InfluentialSet influential_set(const Dag& dag) {
  return influential_set(dag, progeny(dag));
}

InfluentialSet influential_set(const Dag& dag, const ProgenyTable& table) {
  const Agent top = table.argmax();
  InfluentialSet result;
  for (std::size_t idx = 0; idx < dag.size(); ++idx) {
    const Agent i = Agent::from_index(idx);
    if (may_be_influential(table, i, top) && is_influential(dag, i)) {
      result.members.push_back({i, table.count(i)});
    }
  }
  sort_by_precedence(result.members);
  return result;
}

InfluentialSet influential_set_exhaustive(const Dag& dag) {
  const ProgenyTable table = progeny(dag);
  InfluentialSet result;
  for (std::size_t idx = 0; idx < dag.size(); ++idx) {
    const Agent i = Agent::from_index(idx);
    if (is_influential(dag, i)) result.members.push_back({i, table.count(i)});
  }
  sort_by_precedence(result.members);
  return result;
}

Agent most_influential(const Dag& dag) { return progeny(dag).argmax(); }

}  // namespace geomech
