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

// Progeny (reverse reachability) of every agent.
//
// P_i is the set of agents with a directed path to i, including i itself;
// p_i = |P_i|. The default path builds a bitset transitive closure with the
// word kernels from kernels.hpp. A per-node reverse BFS is kept as the
// reference implementation and must agree count-for-count.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "geomech/dag.hpp"
#include "geomech/kernels.hpp"

namespace geomech {

/// Square bit matrix; row r holds one bit per agent index.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_per_row_((n + 63) / 64), bits_(n_ * words_per_row_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_per_row_; }

  std::span<kernels::Word> row(std::size_t r) {
    return {bits_.data() + r * words_per_row_, words_per_row_};
  }
  std::span<const kernels::Word> row(std::size_t r) const {
    return {bits_.data() + r * words_per_row_, words_per_row_};
  }
  bool test(std::size_t r, std::size_t c) const {
    return (bits_[r * words_per_row_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c) {
    bits_[r * words_per_row_ + c / 64] |= kernels::Word{1} << (c % 64);
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<kernels::Word> bits_;
};

class ProgenyTable {
 public:
  ProgenyTable(std::vector<std::uint32_t> counts,
               std::optional<BitMatrix> sets = std::nullopt)
      : counts_(std::move(counts)), sets_(std::move(sets)) {}

  std::size_t size() const { return counts_.size(); }
  std::uint32_t count(Agent a) const { return counts_[a.index()]; }
  std::uint32_t operator[](Agent a) const { return count(a); }
  std::span<const std::uint32_t> counts() const { return counts_; }

  bool has_sets() const { return sets_.has_value(); }
  /// Whether `member` ∈ P_of. Requires has_sets().
  bool in_progeny(Agent of, Agent member) const {
    return sets_->test(of.index(), member.index());
  }
  /// P_of in ascending ID order. Requires has_sets().
  std::vector<Agent> members(Agent of) const;
  const BitMatrix& sets() const { return *sets_; }

  /// Agent with the ≻-maximum progeny (largest count, lowest ID on ties).
  Agent argmax() const;
  std::uint32_t max_count() const { return count(argmax()); }

 private:
  std::vector<std::uint32_t> counts_;
  std::optional<BitMatrix> sets_;
};

/// Largest n for which progeny() materializes the closure matrix.
inline constexpr std::size_t kClosureLimit = std::size_t{1} << 15;

/// Progeny counts, plus sets when n <= kClosureLimit. Larger graphs fall
/// back to the BFS path and carry counts only.
ProgenyTable progeny(const Dag& dag);

/// Reference path: one reverse BFS per agent. Counts only.
ProgenyTable progeny_bfs(const Dag& dag);

/// Bitset closure for any n; always carries sets.
ProgenyTable progeny_closure(const Dag& dag);

/// Graph induced by agent i's progeny with a stable relabeling: node k of
/// `graph` (1-based) is `original[k - 1]`, and `original` is ascending.
struct ProgenySubgraph {
  Dag graph;
  std::vector<Agent> original;
};

ProgenySubgraph progeny_subgraph(const Dag& dag, Agent i);

}  // namespace geomech
