// Copyright 2026 The qmetric Authors
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

#include <cstdint>
#include <optional>
#include <vector>

#include "qmetric/metrics_closed.hpp"
#include "qmetric/states.hpp"

namespace qmetric {

inline constexpr int kMaxSeparableTerms = 16;

/// sum_i w_i |a_i><a_i| (x) |b_i><b_i| over qubit pure states a_i, b_i.
struct SeparableDecomposition {
  std::vector<double> weights;
  std::vector<ComplexVector> factors_a;
  std::vector<ComplexVector> factors_b;

  std::size_t size() const noexcept { return weights.size(); }

  /// Throws ValidationError("decomposition") on inconsistent lengths, more
  /// than 16 terms, weights off the simplex, or non-normalized qubit factors.
  void validate() const;

  /// The assembled two-qubit state (validated).
  DensityMatrix assemble() const;
};

struct EntanglementResult {
  double value = 0.0;
  SeparableDecomposition closest;
  MetricId metric = MetricId::bures();
  bool converged = false;
};

struct EntanglementOptions {
  /// Terms in the searched decomposition; four suffice for any separable
  /// two-qubit state.
  int terms = 4;
  int evaluations_per_restart = 2000;
  int jobs = 1;
};

inline constexpr int kDefaultEntanglementRestarts = 24;

/// True iff the partial transpose over B has no eigenvalue below -1e-10.
/// Only the 2 (x) 2 shape is supported, where this decides separability.
bool ppt_check(const DensityMatrix& rho, BipartiteShape shape);

/// `terms` product terms with flat-simplex weights and Haar-random qubit factors.
SeparableDecomposition random_separable(int terms, std::uint64_t seed);

/// Explicit decomposition of a separable two-qubit state into at most four
/// pure product states (Wootters' construction). Returns nullopt when the
/// state is entangled.
std::optional<SeparableDecomposition> product_decomposition(const DensityMatrix& rho);

/// Upper bound on min_{sigma separable} D(rho, sigma) for a two-qubit rho,
/// from multi-start Nelder-Mead over decomposition parameters. Supported
/// metrics: trace, bures, D_p.
EntanglementResult geometric_entanglement(const DensityMatrix& rho, const MetricId& metric,
                                          int restarts, std::uint64_t seed,
                                          const EntanglementOptions& options = {});

}  // namespace qmetric
