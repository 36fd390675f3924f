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

#include "geomech/progeny.hpp"

#include <algorithm>

namespace geomech {

std::vector<Agent> ProgenyTable::members(Agent of) const {
  std::vector<Agent> out;
  for (std::size_t c = 0; c < counts_.size(); ++c) {
    if (sets_->test(of.index(), c)) out.push_back(Agent::from_index(c));
  }
  return out;
}

Agent ProgenyTable::argmax() const {
  // max_element keeps the first maximum, which is the lowest ID.
  const auto it = std::max_element(counts_.begin(), counts_.end());
  return Agent::from_index(static_cast<std::size_t>(it - counts_.begin()));
}

ProgenyTable progeny_closure(const Dag& dag) {
  const std::size_t n = dag.size();
  BitMatrix reach(n);
  std::vector<std::uint32_t> counts(n);
  // Followers come first in topological order, so every follower row is
  // complete before it is folded into the rows it reaches.
  for (std::uint32_t v : dag.topological_order()) {
    auto row = reach.row(v);
    reach.set(v, v);
    for (std::uint32_t u : dag.follower_indices(v)) {
      kernels::or_into(row, reach.row(u));
    }
    counts[v] = static_cast<std::uint32_t>(kernels::popcount(row));
  }
  return ProgenyTable(std::move(counts), std::move(reach));
}

ProgenyTable progeny_bfs(const Dag& dag) {
  const std::size_t n = dag.size();
  std::vector<std::uint32_t> counts(n);
  std::vector<std::uint32_t> stamp(n, UINT32_MAX);
  std::vector<std::uint32_t> queue;
  queue.reserve(n);
  for (std::uint32_t root = 0; root < n; ++root) {
    queue.clear();
    queue.push_back(root);
    stamp[root] = root;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::uint32_t u : dag.follower_indices(queue[head])) {
        if (stamp[u] != root) {
          stamp[u] = root;
          queue.push_back(u);
        }
      }
    }
    counts[root] = static_cast<std::uint32_t>(queue.size());
  }
  return ProgenyTable(std::move(counts));
}

ProgenyTable progeny(const Dag& dag) {
  return dag.size() <= kClosureLimit ? progeny_closure(dag) : progeny_bfs(dag);
}

ProgenySubgraph progeny_subgraph(const Dag& dag, Agent i) {
  if (!dag.contains(i)) {
    throw GraphError(GraphErrc::kUnknownAgent,
                     "unknown agent " + std::to_string(i.id));
  }
  // Reverse BFS from i collects P_i without needing the full closure.
  std::vector<char> in_set(dag.size(), 0);
  std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(i.index())};
  in_set[i.index()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::uint32_t u : dag.follower_indices(queue[head])) {
      if (!in_set[u]) {
        in_set[u] = 1;
        queue.push_back(u);
      }
    }
  }
  std::vector<Agent> original;
  std::vector<std::uint32_t> relabel(dag.size(), 0);
  for (std::size_t v = 0; v < dag.size(); ++v) {
    if (in_set[v]) {
      original.push_back(Agent::from_index(v));
      relabel[v] = static_cast<std::uint32_t>(original.size());
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : dag.edges()) {
    if (in_set[e.follower.index()] && in_set[e.followee.index()]) {
      edges.push_back({Agent{relabel[e.follower.index()]},
                       Agent{relabel[e.followee.index()]}});
    }
  }
  return {Dag::from_edges(original.size(), std::move(edges)), std::move(original)};
}

}  // namespace geomech
