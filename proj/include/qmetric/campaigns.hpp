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
#include <string>
#include <utility>
#include <vector>

#include "qmetric/convexity_lab.hpp"

namespace qmetric {

/// One trial of a property campaign. `gap` is the amount by which the
/// property's inequality failed (negative or zero when it held).
struct TrialGap {
  std::int64_t trial = 0;
  std::string check;
  double gap = 0.0;
  bool violated = false;
};

struct CampaignReport {
  std::string name;
  double tolerance = 0.0;
  std::vector<TrialGap> trials;  // ordered by trial index
  std::optional<Witness> witness;  // lowest-index violation, when it has a witness form

  int violations() const;
  double worst_gap() const;
  bool clean() const { return violations() == 0; }
};

struct CampaignOptions {
  int trials = 200;
  std::uint64_t seed = 0;
  std::vector<Eigen::Index> dims = {2, 3};
  int jobs = 1;
  int dp_restarts = 0;  // 0 selects default_dp_restarts(dim)
};

/// d_p(T rho, T sigma) <= d_p(rho, sigma) + 2e-4 on random triples.
CampaignReport verify_contractivity(double p, const CampaignOptions& options);

/// Joint convexity of `metric` along the find_convexity_violation protocol
/// (trials count the random tuples after the lambda grid).
CampaignReport verify_joint_convexity(const MetricId& metric, const CampaignOptions& options);

/// Symmetry (1e-10), identity of indiscernibles (1e-8), triangle inequality
/// (1e-9) and unitary invariance (1e-9) of D_p on random triples.
CampaignReport verify_metric_axioms(double p, const CampaignOptions& options);

/// Spectral weak majorization and (D_q)^q <= (D_p)^p + 1e-9 on random pairs,
/// cycling through `pairs`.
CampaignReport verify_majorization(const std::vector<std::pair<double, double>>& pairs,
                                   const CampaignOptions& options);

/// The two-outcome mixing inequality on the Example swap tuple (trial 0,
/// lambda = 1/2) followed by uniformly sampled tuples; tolerance 1e-12.
CampaignReport verify_eq8(double p, const CampaignOptions& options);

/// Closed-form Hessian of f against central differences (step 1e-5,
/// relative 1e-4) and its PSD-ness (1e-9) on the grid {k / (n + 1)}^2.
CampaignReport verify_hessian(int grid_points);

/// F_A(T rho, T sigma) >= F_A(rho, sigma) - 1e-9 on random triples and
/// F_A = |<phi|psi>|^2 within 1e-10 on random pure pairs.
CampaignReport verify_a_fidelity(const CampaignOptions& options);

/// No separable sample (1 to 16 product terms) is flagged by the Nielsen
/// criterion; the Bell state (last record) is.
CampaignReport verify_nielsen(const CampaignOptions& options);

}  // namespace qmetric
