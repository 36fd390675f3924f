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

#include <gtest/gtest.h>

#include "geomech/generators.hpp"
#include "geomech/influence.hpp"
#include "support/oracles.hpp"

namespace geomech {
namespace {

using testing::oracle_influential_set;
using testing::oracle_is_influential;
using testing::raw;

Agent A(std::uint32_t id) { return Agent{id}; }

std::vector<std::pair<int, int>> as_pairs(const InfluentialSet& set) {
  std::vector<std::pair<int, int>> out;
  for (const auto& m : set.members) {
    out.emplace_back(static_cast<int>(m.agent.id), static_cast<int>(m.progeny));
  }
  return out;
}

TEST(Precedes, TieBreakRule) {
  EXPECT_TRUE(precedes(5, A(2), 3, A(1)));
  EXPECT_TRUE(precedes(4, A(1), 4, A(3)));
  EXPECT_FALSE(precedes(4, A(3), 4, A(1)));
  EXPECT_FALSE(precedes(4, A(3), 4, A(3)));
}

TEST(Precedes, StrictTotalOrderOnDistinctAgents) {
  Rng rng(3);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::uint64_t pa = rng.below(5), pb = rng.below(5), pc = rng.below(5);
    const Agent a = A(1 + rng.below(6)), b = A(1 + rng.below(6)), c = A(1 + rng.below(6));
    if (a == b || b == c || a == c) continue;
    ASSERT_NE(precedes(pa, a, pb, b), precedes(pb, b, pa, a));  // total + asymmetric
    if (precedes(pa, a, pb, b) && precedes(pb, b, pc, c)) ASSERT_TRUE(precedes(pa, a, pc, c));
  }
}

TEST(IsInfluential, Examples) {
  EXPECT_TRUE(is_influential(Dag::from_edges(1, {}), A(1)));

  const Dag ub = upper_bound_graph(3);
  for (std::uint32_t i : {3u, 4u, 5u}) EXPECT_TRUE(is_influential(ub, A(i))) << i;
  for (std::uint32_t i : {1u, 2u}) EXPECT_FALSE(is_influential(ub, A(i))) << i;

  const Dag w = witness_graph();
  for (std::uint32_t i = 1; i <= 7; ++i) {
    EXPECT_EQ(is_influential(w, A(i)), i <= 2) << i;
    EXPECT_EQ(is_influential(w, A(i)), oracle_is_influential(raw(w), static_cast<int>(i)));
  }
  EXPECT_THROW(is_influential(w, A(8)), GraphError);
}

TEST(InfluentialSet, Examples) {
  EXPECT_EQ(as_pairs(influential_set(Dag::from_edges(3, {}))),
            (std::vector<std::pair<int, int>>{{1, 1}}));
  EXPECT_EQ(as_pairs(influential_set(witness_graph())),
            (std::vector<std::pair<int, int>>{{1, 7}, {2, 4}}));
  EXPECT_EQ(as_pairs(influential_set(witness_graph())), oracle_influential_set(raw(witness_graph())));
  EXPECT_EQ(as_pairs(influential_set(upper_bound_graph(3))),
            (std::vector<std::pair<int, int>>{{5, 5}, {4, 4}, {3, 3}}));
  const InfluentialSet single = influential_set(Dag::from_edges(1, {}));
  EXPECT_EQ(single.size(), 1u);
  EXPECT_EQ(single.rank(A(1)), 0u);
}

TEST(InfluentialSet, UpperBoundFamily) {
  for (std::size_t k = 2; k <= 50; ++k) {
    const InfluentialSet set = influential_set(upper_bound_graph(k));
    ASSERT_EQ(set.size(), k);
    for (std::size_t r = 0; r < k; ++r) {
      ASSERT_EQ(set.members[r].agent.id, 2 * k - 1 - r);
      ASSERT_EQ(set.members[r].progeny, 2 * k - 1 - r);
    }
    ASSERT_EQ(most_influential(upper_bound_graph(k)), A(static_cast<std::uint32_t>(2 * k - 1)));
  }
}

// The pruned computation, the unpruned direct evaluation, and the
// definition-level oracle all agree.
TEST(InfluentialSet, PrunedMatchesExhaustiveAndOracle) {
  Rng rng(41);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t n = 1 + rng.below(12);
    const Dag g = trial % 3 == 0 ? random_forest(n, rng.next())
                                 : gnp_dag(n, rng.uniform01(), rng.next());
    const InfluentialSet pruned = influential_set(g);
    ASSERT_EQ(pruned, influential_set_exhaustive(g)) << serialize(g);
    ASSERT_EQ(as_pairs(pruned), oracle_influential_set(raw(g))) << serialize(g);
  }
}

// Ordering by progeny in G equals ordering by each member's progeny in its
// own out-edge-deleted graph.
TEST(InfluentialSet, OrderingKeysAgree) {
  Rng rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const Dag g = gnp_dag(1 + rng.below(14), 0.4, rng.next());
    const InfluentialSet set = influential_set(g);
    for (const auto& m : set.members) {
      ASSERT_EQ(progeny(remove_out_edges(g, m.agent)).count(m.agent), m.progeny);
    }
    for (std::size_t r = 0; r + 1 < set.size(); ++r) {
      ASSERT_GT(set.members[r].progeny, set.members[r + 1].progeny);
    }
  }
}

TEST(InfluentialSet, InvariantUnderOwnOutEdges) {
  Rng rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    const Dag g = gnp_dag(2 + rng.below(10), 0.5, rng.next());
    const Agent i = Agent::from_index(rng.below(g.size()));
    std::vector<Agent> keep;
    for (const Edge& e : g.out_edges(i)) {
      if (rng.bernoulli(0.5)) keep.push_back(e.followee);
    }
    ASSERT_EQ(is_influential(g, i), is_influential(apply_report(g, i, keep), i));
  }
}

TEST(MostInfluential, Examples) {
  EXPECT_EQ(most_influential(parse_edge_list("3\n2 1\n3 2")), A(1));
  Rng rng(53);
  for (int trial = 0; trial < 10000; ++trial) {
    const Dag g = gnp_dag(1 + rng.below(20), rng.uniform01() * 0.5, rng.next());
    const Agent top = most_influential(g);
    ASSERT_EQ(g.out_degree(top), 0u);
    if (trial % 10 == 0) ASSERT_EQ(influential_set(g).members.front().agent, top);
  }
}

TEST(InfluentialSet, LargeTightnessGraphUsesPruning) {
  const Dag g = tightness_family(1000);
  EXPECT_EQ(as_pairs(influential_set(g)),
            (std::vector<std::pair<int, int>>{{1, 2001}, {2, 1001}}));
}

}  // namespace
}  // namespace geomech
