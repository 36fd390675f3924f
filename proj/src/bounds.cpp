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

#include "geomech/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "geomech/generators.hpp"

namespace geomech {

namespace {

constexpr std::size_t kDirectSumLimit = 10'000'000;

void require_k(std::size_t k) {
  if (k < 2) {
    throw std::invalid_argument("bound construction needs k >= 2, got " +
                                std::to_string(k));
  }
}

// H_n - ln n - gamma, truncated after the n^-6 term.
long double harmonic_remainder(long double n) {
  const long double inv = 1.0L / n;
  const long double inv2 = inv * inv;
  return inv / 2 - inv2 / 12 + inv2 * inv2 / 120 - inv2 * inv2 * inv2 / 252;
}

}  // namespace

long double harmonic_tail_direct(std::size_t k) {
  long double sum = 0.0L;
  long double carry = 0.0L;
  // Smallest terms first.
  for (std::size_t j = 2 * k - 1; j > k; --j) {
    const long double y = 1.0L / static_cast<long double>(j) - carry;
    const long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

long double harmonic_tail_asymptotic(std::size_t k) {
  const auto kk = static_cast<long double>(k);
  // ln((2k-1)/k) = ln 2 + log1p(-1/(2k)).
  return std::numbers::ln2_v<long double> + std::log1p(-1.0L / (2 * kk)) +
         harmonic_remainder(2 * kk - 1) - harmonic_remainder(kk);
}

long double harmonic_tail(std::size_t k) {
  return k < kDirectSumLimit ? harmonic_tail_direct(k) : harmonic_tail_asymptotic(k);
}

long double equalized_ratio(std::size_t k) {
  require_k(k);
  return 1.0L / (1.0L + harmonic_tail(k));
}

BoundSolution solve_equalized_system(std::size_t k) {
  require_k(k);
  const long double r = equalized_ratio(k);
  BoundSolution solution{k, std::vector<double>(k), static_cast<double>(r)};
  solution.betas[0] = static_cast<double>(r);
  for (std::size_t t = 1; t < k; ++t) {
    solution.betas[t] = static_cast<double>(r / static_cast<long double>(k + t));
  }
  return solution;
}

BoundSolution solve_equalized_system_generic(std::size_t k) {
  require_k(k);
  // With gamma = beta / r the equalities become L * gamma = 1, where row
  // j - k of L holds i / j for i = k..j.
  const auto coefficient = [k](std::size_t row, std::size_t col) {
    return static_cast<long double>(k + col) / static_cast<long double>(k + row);
  };
  std::vector<long double> gamma(k);
  for (std::size_t row = 0; row < k; ++row) {
    long double acc = 1.0L;
    for (std::size_t col = 0; col < row; ++col) acc -= coefficient(row, col) * gamma[col];
    gamma[row] = acc / coefficient(row, row);
  }
  long double total = 0.0L;
  for (long double g : gamma) total += g;
  const long double r = 1.0L / total;
  BoundSolution solution{k, std::vector<double>(k), static_cast<double>(r)};
  for (std::size_t t = 0; t < k; ++t) {
    solution.betas[t] = static_cast<double>(gamma[t] * r);
  }
  return solution;
}

long double limit_constant() {
  return 1.0L / (1.0L + std::numbers::ln2_v<long double>);
}

std::vector<ConvergenceRow> convergence_table(std::vector<std::size_t> k_values) {
  std::sort(k_values.begin(), k_values.end());
  k_values.erase(std::unique(k_values.begin(), k_values.end()), k_values.end());
  std::vector<ConvergenceRow> rows;
  rows.reserve(k_values.size());
  const long double limit = limit_constant();
  for (std::size_t k : k_values) {
    const long double r = equalized_ratio(k);
    rows.push_back({k, r, r - limit});
  }
  return rows;
}

CeilingReport empirical_ceiling_check(const Mechanism& mechanism, std::size_t k) {
  require_k(k);
  CeilingReport report;
  report.k = k;
  report.equalized_ratio = static_cast<double>(equalized_ratio(k));
  std::vector<SelectionDistribution> dists;
  for (std::size_t j = k; j <= 2 * k - 1; ++j) {
    const Dag graph = worst_case_graph(k, j);
    dists.push_back(mechanism(graph));
    RatioReport ratio = expected_ratio(graph, dists.back());
    if (report.ratios.empty() || ratio.ratio < report.min_ratio) {
      report.min_ratio = ratio.ratio;
      report.argmin_j = j;
    }
    report.ratios.push_back(std::move(ratio.ratio));
  }
  for (std::size_t i = k; i <= 2 * k - 1; ++i) {
    const Agent agent{static_cast<std::uint32_t>(i)};
    for (std::size_t j = i + 1; j <= 2 * k - 1; ++j) {
      if (dists[j - k].prob(agent) < dists[i - k].prob(agent)) report.monotone = false;
    }
  }
  return report;
}

}  // namespace geomech
