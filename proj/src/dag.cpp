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

#include "geomech/dag.hpp"

#include <algorithm>
#include <sstream>

namespace geomech {

namespace {

std::string edge_text(const Edge& e) {
  return std::to_string(e.follower.id) + " " + std::to_string(e.followee.id);
}

}  // namespace

std::string_view to_string(GraphErrc code) {
  switch (code) {
    case GraphErrc::kMalformedLine: return "malformed-line";
    case GraphErrc::kEmptyGraph: return "empty-graph";
    case GraphErrc::kAgentOutOfRange: return "agent-out-of-range";
    case GraphErrc::kSelfLoop: return "self-loop";
    case GraphErrc::kDuplicateEdge: return "duplicate-edge";
    case GraphErrc::kCycle: return "cycle";
    case GraphErrc::kUnknownAgent: return "unknown-agent";
    case GraphErrc::kEdgeNotInTruth: return "edge-not-in-truth";
  }
  return "unknown";
}

GraphError::GraphError(GraphErrc code, const std::string& message,
                       std::optional<std::size_t> line,
                       std::optional<Edge> edge)
    : std::runtime_error(message), code_(code), line_(line), edge_(edge) {}

Dag Dag::from_edges(std::size_t n, std::vector<Edge> edges) {
  if (n == 0) {
    throw GraphError(GraphErrc::kEmptyGraph, "graph must have at least one agent");
  }
  if (n > UINT32_MAX - 1) {
    throw GraphError(GraphErrc::kAgentOutOfRange, "agent count too large");
  }
  for (const Edge& e : edges) {
    if (e.follower.id < 1 || e.follower.id > n || e.followee.id < 1 ||
        e.followee.id > n) {
      throw GraphError(GraphErrc::kAgentOutOfRange,
                       "edge " + edge_text(e) + " references an agent outside 1.." +
                           std::to_string(n),
                       std::nullopt, e);
    }
    if (e.follower == e.followee) {
      throw GraphError(GraphErrc::kSelfLoop, "self-loop on agent " +
                                                 std::to_string(e.follower.id),
                       std::nullopt, e);
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end());
      dup != edges.end()) {
    throw GraphError(GraphErrc::kDuplicateEdge,
                     "duplicate edge " + edge_text(*dup), std::nullopt, *dup);
  }

  Dag dag;
  dag.n_ = n;
  dag.edges_ = std::move(edges);
  dag.build_adjacency();

  // Kahn's algorithm over follower -> followee.
  std::vector<std::uint32_t> pending(n);
  for (std::size_t v = 0; v < n; ++v) {
    pending[v] = static_cast<std::uint32_t>(dag.follower_indices(v).size());
  }
  dag.topo_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (pending[v] == 0) dag.topo_.push_back(static_cast<std::uint32_t>(v));
  }
  for (std::size_t head = 0; head < dag.topo_.size(); ++head) {
    for (std::uint32_t w : dag.followee_indices(dag.topo_[head])) {
      if (--pending[w] == 0) dag.topo_.push_back(w);
    }
  }
  if (dag.topo_.size() == n) return dag;

  // Every leftover node still has a leftover follower, so walking backwards
  // along followers must revisit a node.
  std::vector<std::int64_t> seen_at(n, -1);
  std::size_t v = 0;
  while (pending[v] == 0) ++v;
  std::vector<std::uint32_t> walk;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<std::int64_t>(walk.size());
    walk.push_back(static_cast<std::uint32_t>(v));
    for (std::uint32_t u : dag.follower_indices(v)) {
      if (pending[u] != 0) {
        v = u;
        break;
      }
    }
  }
  // walk[seen_at[v]..] is the cycle traversed against edge direction; the
  // edge closing it runs from v to the last node visited.
  const Edge closing{Agent::from_index(v), Agent::from_index(walk.back())};
  std::ostringstream cycle;
  for (std::size_t i = walk.size(); i-- > static_cast<std::size_t>(seen_at[v]);) {
    cycle << walk[i] + 1 << " -> ";
  }
  cycle << walk.back() + 1;
  throw GraphError(GraphErrc::kCycle,
                   "cycle detected at edge " + edge_text(closing) + " (" +
                       cycle.str() + ")",
                   std::nullopt, closing);
}

void Dag::build_adjacency() {
  out_offsets_.assign(n_ + 1, 0);
  in_offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[e.follower.index() + 1];
    ++in_offsets_[e.followee.index() + 1];
  }
  for (std::size_t i = 0; i < n_; ++i) {
    out_offsets_[i + 1] += out_offsets_[i];
    in_offsets_[i + 1] += in_offsets_[i];
  }
  out_targets_.resize(edges_.size());
  in_sources_.resize(edges_.size());
  std::vector<std::uint32_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // edges_ is sorted by follower, so out_targets_ fills in order and each
  // follower's slice is sorted by followee.
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    out_targets_[k] = static_cast<std::uint32_t>(e.followee.index());
    in_sources_[in_fill[e.followee.index()]++] =
        static_cast<std::uint32_t>(e.follower.index());
  }
}

bool Dag::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t Dag::out_degree(Agent a) const {
  return followee_indices(a.index()).size();
}

std::size_t Dag::in_degree(Agent a) const {
  return follower_indices(a.index()).size();
}

std::span<const Edge> Dag::out_edges(Agent a) const {
  const std::size_t i = a.index();
  return std::span<const Edge>(edges_).subspan(
      out_offsets_[i], out_offsets_[i + 1] - out_offsets_[i]);
}

std::span<const std::uint32_t> Dag::followee_indices(std::size_t index) const {
  return std::span<const std::uint32_t>(out_targets_)
      .subspan(out_offsets_[index], out_offsets_[index + 1] - out_offsets_[index]);
}

std::span<const std::uint32_t> Dag::follower_indices(std::size_t index) const {
  return std::span<const std::uint32_t>(in_sources_)
      .subspan(in_offsets_[index], in_offsets_[index + 1] - in_offsets_[index]);
}

Dag Dag::with_edge_subset(std::vector<Edge> kept) const {
  std::sort(kept.begin(), kept.end());
  Dag dag;
  dag.n_ = n_;
  dag.edges_ = std::move(kept);
  dag.build_adjacency();
  dag.topo_ = topo_;
  return dag;
}

ReportProfile& ReportProfile::declare(Agent a, std::vector<Agent> followees) {
  if (a.id == 0) {
    throw GraphError(GraphErrc::kUnknownAgent, "agent ids start at 1");
  }
  if (declared_.size() < a.id) declared_.resize(a.id);
  std::sort(followees.begin(), followees.end());
  followees.erase(std::unique(followees.begin(), followees.end()),
                  followees.end());
  declared_[a.index()] = std::move(followees);
  return *this;
}

std::optional<std::span<const Agent>> ReportProfile::declared(Agent a) const {
  if (a.id == 0 || a.index() >= declared_.size() || !declared_[a.index()]) {
    return std::nullopt;
  }
  return std::span<const Agent>(*declared_[a.index()]);
}

std::vector<Agent> ReportProfile::declaring_agents() const {
  std::vector<Agent> agents;
  for (std::size_t i = 0; i < declared_.size(); ++i) {
    if (declared_[i]) agents.push_back(Agent::from_index(i));
  }
  return agents;
}

Dag remove_out_edges(const Dag& dag, Agent i) {
  if (!dag.contains(i)) {
    throw GraphError(GraphErrc::kUnknownAgent,
                     "unknown agent " + std::to_string(i.id));
  }
  std::vector<Edge> kept;
  kept.reserve(dag.edge_count());
  for (const Edge& e : dag.edges()) {
    if (e.follower != i) kept.push_back(e);
  }
  return dag.with_edge_subset(std::move(kept));
}

Dag apply_report(const Dag& truth, const ReportProfile& report) {
  std::vector<Edge> kept;
  kept.reserve(truth.edge_count());
  for (std::size_t idx = 0; idx < truth.size(); ++idx) {
    const Agent a = Agent::from_index(idx);
    const auto declared = report.declared(a);
    if (!declared) {
      const auto own = truth.out_edges(a);
      kept.insert(kept.end(), own.begin(), own.end());
      continue;
    }
    for (Agent followee : *declared) {
      const Edge e{a, followee};
      if (!truth.has_edge(e)) {
        throw GraphError(GraphErrc::kEdgeNotInTruth,
                         "reported edge " + edge_text(e) +
                             " is not among the agent's true out-edges",
                         std::nullopt, e);
      }
      kept.push_back(e);
    }
  }
  for (Agent a : report.declaring_agents()) {
    if (!truth.contains(a)) {
      throw GraphError(GraphErrc::kUnknownAgent,
                       "report declares edges for unknown agent " +
                           std::to_string(a.id));
    }
  }
  return truth.with_edge_subset(std::move(kept));
}

Dag apply_report(const Dag& truth, Agent i, std::span<const Agent> followees) {
  if (!truth.contains(i)) {
    throw GraphError(GraphErrc::kUnknownAgent,
                     "unknown agent " + std::to_string(i.id));
  }
  ReportProfile report;
  report.declare(i, std::vector<Agent>(followees.begin(), followees.end()));
  return apply_report(truth, report);
}

}  // namespace geomech
