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

// Independent test oracles. Nothing here calls into the library's
// progeny/influence code: graphs are plain edge lists, reachability is a
// per-node BFS, and influential sets follow the definition literally.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "geomech/dag.hpp"
#include "geomech/mechanisms.hpp"
#include "geomech/rational.hpp"

namespace geomech::testing {

using RawEdge = std::pair<int, int>;  // (follower, followee), 1-based
struct RawGraph {
  int n = 0;
  std::vector<RawEdge> edges;
};

inline RawGraph raw(const Dag& dag) {
  RawGraph g{static_cast<int>(dag.size()), {}};
  for (const Edge& e : dag.edges()) {
    g.edges.emplace_back(static_cast<int>(e.follower.id), static_cast<int>(e.followee.id));
  }
  return g;
}

inline Dag to_dag(const RawGraph& g) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges) {
    edges.push_back({Agent{static_cast<std::uint32_t>(u)}, Agent{static_cast<std::uint32_t>(v)}});
  }
  return Dag::from_edges(static_cast<std::size_t>(g.n), std::move(edges));
}

// reach[i][j] == true iff j has a directed path to i (j ∈ P_i), 1-based.
inline std::vector<std::vector<bool>> bfs_reach(const RawGraph& g) {
  std::vector<std::vector<int>> followers(g.n + 1);
  for (auto [u, v] : g.edges) followers[v].push_back(u);
  std::vector<std::vector<bool>> reach(g.n + 1, std::vector<bool>(g.n + 1, false));
  for (int root = 1; root <= g.n; ++root) {
    std::vector<int> stack{root};
    reach[root][root] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : followers[v]) {
        if (!reach[root][u]) {
          reach[root][u] = true;
          stack.push_back(u);
        }
      }
    }
  }
  return reach;
}

inline std::vector<int> bfs_progeny(const RawGraph& g) {
  const auto reach = bfs_reach(g);
  std::vector<int> p(g.n + 1, 0);
  for (int i = 1; i <= g.n; ++i) p[i] = static_cast<int>(std::count(reach[i].begin(), reach[i].end(), true));
  return p;
}

inline bool oracle_precedes(int p_i, int i, int p_j, int j) {
  return p_i > p_j || (p_i == p_j && i < j);
}

inline RawGraph without_out_edges(const RawGraph& g, int i) {
  RawGraph h{g.n, {}};
  for (auto e : g.edges) {
    if (e.first != i) h.edges.push_back(e);
  }
  return h;
}

inline bool oracle_is_influential(const RawGraph& g, int i) {
  const auto p = bfs_progeny(without_out_edges(g, i));
  for (int j = 1; j <= g.n; ++j) {
    if (j != i && !oracle_precedes(p[i], i, p[j], j)) return false;
  }
  return true;
}

// (agent, progeny in g), sorted by ≻.
inline std::vector<std::pair<int, int>> oracle_influential_set(const RawGraph& g) {
  const auto p = bfs_progeny(g);
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= g.n; ++i) {
    if (oracle_is_influential(g, i)) out.emplace_back(i, p[i]);
  }
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    return oracle_precedes(a.second, a.first, b.second, b.first);
  });
  return out;
}

// Geometric distribution computed from the oracle influential set.
inline std::vector<Rational> oracle_geometric(const RawGraph& g) {
  const auto set = oracle_influential_set(g);
  std::vector<Rational> x(g.n + 1);
  const int m = static_cast<int>(set.size());
  for (int j = 1; j <= m; ++j) {
    x[set[j - 1].first] = Rational(1, BigInt(1) << (m - j + 1));
  }
  return x;
}

inline bool oracle_acyclic(int n, const std::vector<RawEdge>& edges) {
  std::vector<int> indeg(n + 1, 0);
  std::vector<std::vector<int>> out(n + 1);
  for (auto [u, v] : edges) {
    out[u].push_back(v);
    ++indeg[v];
  }
  std::vector<int> ready;
  for (int v = 1; v <= n; ++v) if (indeg[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : out[v]) if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen == n;
}

// Every labeled DAG on n agents (n <= 5 keeps this under 2^20 masks).
inline void for_each_labeled_dag(int n, const std::function<void(const RawGraph&)>& visit) {
  std::vector<RawEdge> pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) if (u != v) pairs.emplace_back(u, v);
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    RawGraph g{n, {}};
    bool two_cycle = false;
    for (std::size_t b = 0; b < pairs.size() && !two_cycle; ++b) {
      if (!((mask >> b) & 1U)) continue;
      const auto [u, v] = pairs[b];
      // Skip masks holding both (u, v) and (v, u) without a full check.
      for (auto e : g.edges) two_cycle |= (e.first == v && e.second == u);
      g.edges.push_back(pairs[b]);
    }
    if (!two_cycle && oracle_acyclic(n, g.edges)) visit(g);
  }
}

// Negative-control mechanism: s_1 gets 1 / (|E| + 2), abstention the rest.
// It violates fairness because outside edges change |E|.
inline SelectionDistribution edge_count_keyed(const Dag& dag) {
  std::vector<Rational> probs(dag.size());
  const auto p = bfs_progeny(raw(dag));
  int top = 1;
  for (int i = 2; i <= static_cast<int>(dag.size()); ++i) {
    if (oracle_precedes(p[i], i, p[top], top)) top = i;
  }
  probs[top - 1] = Rational(1, BigInt(dag.edge_count() + 2));
  return SelectionDistribution::with_remainder(std::move(probs));
}

// Fair control: s_1 gets 1/n, which only depends on n.
inline SelectionDistribution size_keyed(const Dag& dag) {
  std::vector<Rational> probs(dag.size());
  const auto p = bfs_progeny(raw(dag));
  int top = 1;
  for (int i = 2; i <= static_cast<int>(dag.size()); ++i) {
    if (oracle_precedes(p[i], i, p[top], top)) top = i;
  }
  probs[top - 1] = Rational(1, BigInt(dag.size()));
  return SelectionDistribution::with_remainder(std::move(probs));
}

}  // namespace geomech::testing
