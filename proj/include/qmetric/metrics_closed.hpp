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

#include <optional>
#include <string>
#include <string_view>

#include "qmetric/states.hpp"

namespace qmetric {

enum class MetricFamily {
  kTrace,      // (1/2) Tr|rho - sigma|
  kBures,      // sqrt(2 - 2F)
  kFidelity,   // Tr sqrt(sqrt(rho) sigma sqrt(rho))
  kAFidelity,  // [Tr(sqrt(rho) sqrt(sigma))]^2
  kBrother,    // D_p, Schatten-p norm of rho^(1/p) - sigma^(1/p)
  kMeasured,   // d_p, supremum over projective measurements
};

/// Identifies a distance or fidelity. `p` is present exactly for D_p and d_p.
class MetricId {
 public:
  static MetricId trace() { return MetricId(MetricFamily::kTrace, std::nullopt); }
  static MetricId bures() { return MetricId(MetricFamily::kBures, std::nullopt); }
  static MetricId fidelity() { return MetricId(MetricFamily::kFidelity, std::nullopt); }
  static MetricId a_fidelity() { return MetricId(MetricFamily::kAFidelity, std::nullopt); }
  static MetricId brother(double p);
  static MetricId measured(double p);

  /// Accepts "trace", "bures", "fidelity", "a_fidelity", "Dp", "dp".
  static MetricId parse(std::string_view name, std::optional<double> p = std::nullopt);

  MetricFamily family() const noexcept { return family_; }
  std::optional<double> p() const noexcept { return p_; }
  /// Exponent used for convexity gaps: p for D_p and d_p, 1 otherwise.
  double power() const noexcept { return p_.value_or(1.0); }
  bool is_fidelity() const noexcept {
    return family_ == MetricFamily::kFidelity || family_ == MetricFamily::kAFidelity;
  }
  std::string name() const;

  friend bool operator==(const MetricId&, const MetricId&) = default;

 private:
  MetricId(MetricFamily family, std::optional<double> p) : family_(family), p_(p) {}

  MetricFamily family_;
  std::optional<double> p_;
};

double trace_metric(const DensityMatrix& rho, const DensityMatrix& sigma);
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
double bures_metric(const DensityMatrix& rho, const DensityMatrix& sigma);
double a_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// D_p(rho, sigma) = [Tr |rho^(1/p) - sigma^(1/p)|^p]^(1/p), p >= 1.
double brother_metric(const DensityMatrix& rho, const DensityMatrix& sigma, double p);

/// Evaluates any closed-form metric. Throws DomainError for d_p, which needs
/// the optimizer in metrics_sup.
double evaluate_closed(const MetricId& metric, const DensityMatrix& rho,
                       const DensityMatrix& sigma);

}  // namespace qmetric
