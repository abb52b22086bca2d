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
#include <span>
#include <vector>

#include "qmetric/channels.hpp"
#include "qmetric/metrics_closed.hpp"
#include "qmetric/states.hpp"

namespace qmetric {

/// Gaps above this are reported as violations.
inline constexpr double kWitnessThreshold = 1e-6;

/// Settings shared by every d_p evaluation inside the lab.
struct LabOptions {
  int dp_restarts = 0;  // 0 selects default_dp_restarts(dim)
  std::uint64_t dp_seed = 0;
  int jobs = 1;
};

enum class WitnessKind {
  kConvexity,      // M(mix)^p - lambda M1^p - (1 - lambda) M2^p > 0
  kContractivity,  // M(T rho, T sigma) - M(rho, sigma) > 0
  kExpansion,      // M(rho, sigma) - M(T rho, T sigma) > 0
};

/// A self-contained counterexample: re-evaluating the stored inputs
/// reproduces `gap`.
struct Witness {
  WitnessKind kind = WitnessKind::kConvexity;
  MetricId metric = MetricId::trace();
  std::vector<DensityMatrix> states;  // (rho1, sigma1, rho2, sigma2) or (rho, sigma)
  std::optional<KrausChannel> channel;
  std::optional<double> lambda;
  double gap = 0.0;
  std::uint64_t seed = 0;
  std::int64_t trial = 0;
};

/// M(lambda rho1 + (1-lambda) rho2, lambda sigma1 + (1-lambda) sigma2)^k
///   - lambda M(rho1, sigma1)^k - (1 - lambda) M(rho2, sigma2)^k
/// with k = p for D_p and d_p and k = 1 for trace and bures. Positive means
/// joint convexity fails. d_p on four diagonal states is evaluated exactly.
double joint_convexity_gap(const MetricId& metric, const DensityMatrix& rho1,
                           const DensityMatrix& sigma1, const DensityMatrix& rho2,
                           const DensityMatrix& sigma2, double lambda,
                           const LabOptions& options = {});

/// Trials below this index scan the diagonal Example pair on a lambda grid.
inline constexpr std::int64_t kConvexityGridPoints = 21;

/// The tuple examined at `trial` by find_convexity_violation, with its gap.
Witness convexity_candidate(const MetricId& metric, std::int64_t trial, std::uint64_t seed,
                            const LabOptions& options = {});

/// Scans the diagonal pair diag(0.2, 0.8), diag(0.4, 0.6) together with its
/// coordinate swap on a lambda grid of step 0.05 (trial indices 0..20), then
/// `trials` random tuples in dims 2-3. d_p uses diagonal states only.
/// Returns the lowest-index tuple with gap > 1e-6.
std::optional<Witness> find_convexity_violation(const MetricId& metric, int trials,
                                                std::uint64_t seed,
                                                const LabOptions& options = {});

/// M(T rho, T sigma) - M(rho, sigma). For d_p the input side is additionally
/// started from the adjoint pullback of the output side's optimal family.
double contractivity_gap(const MetricId& metric, const DensityMatrix& rho,
                         const DensityMatrix& sigma, const KrausChannel& channel,
                         const LabOptions& options = {});

enum class SearchDirection { kIncrease, kDecrease };

/// The D_p triple examined at `trial` by find_contractivity_violation. The
/// stored gap is signed so that positive means a hit in `direction`.
Witness contractivity_candidate(double p, std::int64_t trial, std::uint64_t seed,
                                SearchDirection direction = SearchDirection::kIncrease);

/// Random (rho, sigma, T) over dims 2-3 and env_dim 1-3, looking for D_p
/// pairs whose distance grows (kIncrease) or shrinks (kDecrease) by more
/// than 1e-6 under the channel.
std::optional<Witness> find_contractivity_violation(
    double p, int trials, std::uint64_t seed,
    SearchDirection direction = SearchDirection::kIncrease, const LabOptions& options = {});

/// Recomputes the gap of a stored witness from its inputs.
double recompute_gap(const Witness& witness, const LabOptions& options = {});

/// LHS - RHS of the mixed-distribution inequality
///   sum_j |[l P1 + (1-l) P2]_j^(1/p) - [l P3 + (1-l) P4]_j^(1/p)|^p
///     <= l sum_j |P1_j^(1/p) - P3_j^(1/p)|^p + (1-l) sum_j |P2_j^(1/p) - P4_j^(1/p)|^p.
/// Distributions must be nonnegative, of equal length, and sum to 1 within 1e-12.
double eq8_gap(std::span<const double> p1, std::span<const double> p2,
               std::span<const double> p3, std::span<const double> p4, double lambda,
               double p);

/// Hessian of f(a, b) = (sqrt a - sqrt b)^2 + (sqrt(1-a) - sqrt(1-b))^2
/// from its closed-form second derivatives; a, b in (0, 1).
RealMatrix hessian_f(double a, double b);

}  // namespace qmetric
