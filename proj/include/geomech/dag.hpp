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

// Immutable directed acyclic graph over agents 1..n.
//
// An edge (u, v) means "u follows v"; information flows from u to v, so u is
// part of v's progeny. External agent IDs are 1-based. Internally every
// agent is addressed by its 0-based index (id - 1).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace geomech {

struct Agent {
  std::uint32_t id = 0;

  constexpr std::size_t index() const { return id - 1; }
  static constexpr Agent from_index(std::size_t index) {
    return Agent{static_cast<std::uint32_t>(index + 1)};
  }
  friend constexpr auto operator<=>(Agent, Agent) = default;
};

struct Edge {
  Agent follower;
  Agent followee;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphErrc {
  kMalformedLine,
  kEmptyGraph,
  kAgentOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kCycle,
  kUnknownAgent,
  kEdgeNotInTruth,
};

std::string_view to_string(GraphErrc code);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, const std::string& message,
             std::optional<std::size_t> line = std::nullopt,
             std::optional<Edge> edge = std::nullopt);

  GraphErrc code() const { return code_; }
  // 1-based input line, when the error came from parsing.
  std::optional<std::size_t> line() const { return line_; }
  std::optional<Edge> edge() const { return edge_; }

 private:
  GraphErrc code_;
  std::optional<std::size_t> line_;
  std::optional<Edge> edge_;
};

class Dag {
 public:
  /// Validates and builds a graph. Throws GraphError on n == 0, endpoints
  /// outside 1..n, self-loops, duplicate edges, or a directed cycle.
  static Dag from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// All edges, sorted lexicographically by (follower, followee).
  std::span<const Edge> edges() const { return edges_; }

  bool contains(Agent a) const { return a.id >= 1 && a.id <= n_; }
  bool has_edge(const Edge& e) const;

  std::size_t out_degree(Agent a) const;
  std::size_t in_degree(Agent a) const;
  /// The edges `a` follows along, sorted by followee.
  std::span<const Edge> out_edges(Agent a) const;

  // Index-level adjacency for algorithms.
  std::span<const std::uint32_t> followee_indices(std::size_t index) const;
  std::span<const std::uint32_t> follower_indices(std::size_t index) const;

  /// Indices ordered so every follower precedes everything it follows.
  std::span<const std::uint32_t> topological_order() const { return topo_; }

  /// Builds the graph on the same agents keeping only `kept`, which must be
  /// a subset of edges(). Reuses this graph's topological order; no cycle
  /// check is needed because deleting edges cannot create one.
  Dag with_edge_subset(std::vector<Edge> kept) const;

  friend bool operator==(const Dag& a, const Dag& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Dag() = default;
  void build_adjacency();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  // CSR adjacency, 0-based indices.
  std::vector<std::uint32_t> out_offsets_, out_targets_;
  std::vector<std::uint32_t> in_offsets_, in_sources_;
  std::vector<std::uint32_t> topo_;
};

/// Declared out-edge sets, one per reporting agent. Agents without an
/// explicit declaration report truthfully.
class ReportProfile {
 public:
  ReportProfile() = default;

  /// Agent `a` declares that it follows exactly `followees`.
  ReportProfile& declare(Agent a, std::vector<Agent> followees);

  std::optional<std::span<const Agent>> declared(Agent a) const;

  std::vector<Agent> declaring_agents() const;

 private:
  std::vector<std::optional<std::vector<Agent>>> declared_;
};


// Deletes exactly agent i's out-edges. Throws GraphError(kUnknownAgent).
Dag remove_out_edges(const Dag& dag, Agent i);

// Graph whose edges are the declared out-edges. Throws GraphError
// (kEdgeNotInTruth) if any declared edge is missing from `truth`.
Dag apply_report(const Dag& truth, const ReportProfile& report);

// Convenience: agent i alone misreports `followees`.
Dag apply_report(const Dag& truth, Agent i, std::span<const Agent> followees);

enum class GraphFormat { kEdgeList, kDot };

/// Parses the edge-list format: first significant line is n, then one
/// "u v" pair per line; blank lines and lines starting with '#' are skipped.
Dag parse_edge_list(std::string_view text);

/// Canonical serialization. Edge lists are sorted, one edge per line, and
/// round-trip through parse_edge_list.
std::string serialize(const Dag& dag, GraphFormat format = GraphFormat::kEdgeList);

}  // namespace geomech
