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

#include "geomech/generators.hpp"

#include <stdexcept>
#include <string>

namespace geomech {

namespace {

Edge edge(std::size_t follower, std::size_t followee) {
  return {Agent{static_cast<std::uint32_t>(follower)},
          Agent{static_cast<std::uint32_t>(followee)}};
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  // SplitMix64 finalizer over a golden-ratio stride.
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Dag gnp_dag(std::size_t n, double p, std::uint64_t seed) {
  require(n >= 1, "gnp-dag needs n >= 1");
  require(p >= 0.0 && p <= 1.0, "gnp-dag needs p in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 2; i <= n; ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      if (p > 0.0 && rng.bernoulli(p)) edges.push_back(edge(i, j));
    }
  }
  return Dag::from_edges(n, std::move(edges));
}

Dag random_forest(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "random-forest needs n >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 2; i <= n; ++i) {
    const std::uint64_t parent = rng.below(i);  // 0 means "no parent"
    if (parent != 0) edges.push_back(edge(i, parent));
  }
  return Dag::from_edges(n, std::move(edges));
}

Dag chain(std::size_t n) {
  require(n >= 1, "chain needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 2; i <= n; ++i) edges.push_back(edge(i, i - 1));
  return Dag::from_edges(n, std::move(edges));
}

Dag upper_bound_graph(std::size_t k) {
  require(k >= 2, "upper-bound graph needs k >= 2");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < k; ++i) edges.push_back(edge(i, k));
  for (std::size_t j = k; j + 1 <= 2 * k - 1; ++j) edges.push_back(edge(j, j + 1));
  return Dag::from_edges(2 * k - 1, std::move(edges));
}

Dag worst_case_graph(std::size_t k, std::size_t j) {
  require(k >= 2, "worst-case graph needs k >= 2");
  require(j >= k && j <= 2 * k - 1,
          "worst-case graph needs k <= j <= 2k-1 (k=" + std::to_string(k) +
              ", j=" + std::to_string(j) + ")");
  const Dag full = upper_bound_graph(k);
  std::vector<Edge> kept;
  for (const Edge& e : full.edges()) {
    if (e.follower.id < j) kept.push_back(e);
  }
  return full.with_edge_subset(std::move(kept));
}

Dag tightness_family(std::size_t k) {
  require(k >= 1, "tightness family needs k >= 1");
  const std::size_t n = 2 * k + 1;
  std::vector<Edge> edges{edge(2, 1)};
  // Agents 3..k+1 are the k-1 leaves on agent 1; k+2..2k+1 the k leaves on 2.
  for (std::size_t i = 3; i <= k + 1; ++i) edges.push_back(edge(i, 1));
  for (std::size_t i = k + 2; i <= n; ++i) edges.push_back(edge(i, 2));
  return Dag::from_edges(n, std::move(edges));
}

Dag witness_graph() {
  return Dag::from_edges(7, {edge(2, 1), edge(5, 1), edge(3, 2), edge(4, 2),
                             edge(7, 3), edge(6, 5)});
}

Dag two_leader_graph() {
  std::vector<Edge> edges{edge(2, 1), edge(3, 1)};
  for (std::size_t i = 4; i <= 8; ++i) edges.push_back(edge(i, 2));
  return Dag::from_edges(8, std::move(edges));
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kGnpDag: return "gnp-dag";
    case Family::kRandomForest: return "random-forest";
    case Family::kChain: return "chain";
    case Family::kUpperBound: return "upper-bound";
    case Family::kWorstCase: return "worst-case";
    case Family::kTightness: return "tightness";
    case Family::kWitness: return "witness";
    case Family::kTwoLeader: return "two-leader";
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : {Family::kGnpDag, Family::kRandomForest, Family::kChain,
                   Family::kUpperBound, Family::kWorstCase, Family::kTightness,
                   Family::kWitness, Family::kTwoLeader}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

Dag generate(const EnsembleSpec& spec, std::uint64_t index) {
  const std::uint64_t seed = split_seed(spec.seed, index);
  switch (spec.family) {
    case Family::kGnpDag: return gnp_dag(spec.n, spec.p, seed);
    case Family::kRandomForest: return random_forest(spec.n, seed);
    case Family::kChain: return chain(spec.n);
    case Family::kUpperBound: return upper_bound_graph(spec.k);
    case Family::kWorstCase: return worst_case_graph(spec.k, spec.j);
    case Family::kTightness: return tightness_family(spec.k);
    case Family::kWitness: return witness_graph();
    case Family::kTwoLeader: return two_leader_graph();
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace geomech
