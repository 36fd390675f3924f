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

// Equalized worst-case ratio system for the upper-bound graph family.
//
// On worst_case_graph(k, j), with probability beta_{i-k} on influential node
// i and the remaining agents ignored, the ratio is
//   R(G_j) = sum_{i=k}^{j} beta_{i-k} * i / j,   k <= j <= 2k-1.
// Equalizing every R(G_j) to a common r subject to sum(beta) = 1 gives
//   beta_0 = r, beta_t = r / (k + t), r_k = 1 / (1 + H_{2k-1} - H_k),
// which decreases to 1 / (1 + ln 2).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "geomech/mechanisms.hpp"
#include "geomech/rational.hpp"

namespace geomech {

struct BoundSolution {
  std::size_t k = 0;
  std::vector<double> betas;  // beta_0 .. beta_{k-1}
  double ratio = 0.0;
};

/// H_{2k-1} - H_k = sum_{j=k+1}^{2k-1} 1/j by compensated summation.
long double harmonic_tail_direct(std::size_t k);
/// The same difference from the Euler-Maclaurin expansion of H_n.
long double harmonic_tail_asymptotic(std::size_t k);
/// Direct below 10^7 terms, asymptotic above.
long double harmonic_tail(std::size_t k);

/// Closed-form r_k. Requires k >= 2.
long double equalized_ratio(std::size_t k);

/// Closed-form solution. Throws std::invalid_argument for k < 2.
BoundSolution solve_equalized_system(std::size_t k);

/// Forward substitution on the k x k lower-triangular system without using
/// its structure; O(k^2). Throws std::invalid_argument for k < 2.
BoundSolution solve_equalized_system_generic(std::size_t k);

/// 1 / (1 + ln 2).
long double limit_constant();

struct ConvergenceRow {
  std::size_t k = 0;
  long double ratio = 0;
  long double gap = 0;  // ratio - limit_constant()
};

/// One row per k, sorted by k. Throws std::invalid_argument for any k < 2.
std::vector<ConvergenceRow> convergence_table(std::vector<std::size_t> k_values);

struct CeilingReport {
  std::size_t k = 0;
  std::vector<Rational> ratios;  // ratios[j - k] = R(worst_case_graph(k, j))
  Rational min_ratio;
  std::size_t argmin_j = 0;
  double equalized_ratio = 0.0;  // r_k for comparison
  // x_i(G_j) >= x_i(G_i) for all k <= i < j <= 2k-1: an agent never gains
  // from the graph in which its own out-edge is gone.
  bool monotone = true;
};

/// Evaluates `mechanism` on every worst_case_graph(k, j). Requires k >= 2.
CeilingReport empirical_ceiling_check(const Mechanism& mechanism, std::size_t k);

}  // namespace geomech
