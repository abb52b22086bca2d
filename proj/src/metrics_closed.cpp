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

#include "qmetric/metrics_closed.hpp"

#include <algorithm>
#include <cmath>

#include "qmetric/error.hpp"

namespace qmetric {

namespace {

void require_same_dim(const DensityMatrix& rho, const DensityMatrix& sigma, const char* what) {
  if (rho.dim() != sigma.dim()) throw DomainError(std::string(what) + ": dimension mismatch");
}

void require_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("metric exponent p must be a finite real >= 1");
}

}  // namespace

MetricId MetricId::brother(double p) {
  require_p(p);
  return MetricId(MetricFamily::kBrother, p);
}

MetricId MetricId::measured(double p) {
  require_p(p);
  return MetricId(MetricFamily::kMeasured, p);
}

MetricId MetricId::parse(std::string_view name, std::optional<double> p) {
  const bool wants_p = name == "Dp" || name == "dp";
  if (!wants_p && p.has_value()) {
    throw DomainError("metric '" + std::string(name) + "' takes no exponent p");
  }
  if (wants_p && !p.has_value()) throw DomainError("metric '" + std::string(name) + "' needs --p");
  if (name == "trace") return trace();
  if (name == "bures") return bures();
  if (name == "fidelity") return fidelity();
  if (name == "a_fidelity") return a_fidelity();
  if (name == "Dp") return brother(*p);
  if (name == "dp") return measured(*p);
  throw DomainError("unknown metric '" + std::string(name) + "'");
}

std::string MetricId::name() const {
  switch (family_) {
    case MetricFamily::kTrace: return "trace";
    case MetricFamily::kBures: return "bures";
    case MetricFamily::kFidelity: return "fidelity";
    case MetricFamily::kAFidelity: return "a_fidelity";
    case MetricFamily::kBrother: return "Dp";
    case MetricFamily::kMeasured: return "dp";
  }
  return "?";
}

double trace_metric(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "trace_metric");
  return 0.5 * hermitian_schatten_power(rho.matrix() - sigma.matrix(), 1.0);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "fidelity");
  const Matrix root = mat_power(rho.matrix(), 0.5);
  const Matrix inner = hermitian_part(root * sigma.matrix() * root);
  double f = 0.0;
  for (double v : clamp_psd_spectrum(eigenvalues(inner))) f += std::sqrt(v);
  return f;
}

double bures_metric(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "bures_metric");
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * fidelity(rho, sigma)));
}

double a_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "a_fidelity");
  // Tr(sqrt(rho) sqrt(sigma)) is real and nonnegative for PSD arguments.
  const double overlap =
      (mat_power(rho.matrix(), 0.5) * mat_power(sigma.matrix(), 0.5)).trace().real();
  return overlap * overlap;
}

double brother_metric(const DensityMatrix& rho, const DensityMatrix& sigma, double p) {
  require_same_dim(rho, sigma, "brother_metric");
  require_p(p);
  const Matrix diff = mat_power(rho.matrix(), 1.0 / p) - mat_power(sigma.matrix(), 1.0 / p);
  return std::pow(hermitian_schatten_power(hermitian_part(diff), p), 1.0 / p);
}

double evaluate_closed(const MetricId& metric, const DensityMatrix& rho,
                       const DensityMatrix& sigma) {
  switch (metric.family()) {
    case MetricFamily::kTrace: return trace_metric(rho, sigma);
    case MetricFamily::kBures: return bures_metric(rho, sigma);
    case MetricFamily::kFidelity: return fidelity(rho, sigma);
    case MetricFamily::kAFidelity: return a_fidelity(rho, sigma);
    case MetricFamily::kBrother: return brother_metric(rho, sigma, *metric.p());
    case MetricFamily::kMeasured:
      throw DomainError("d_p has no closed form; use dp_supremum");
  }
  throw DomainError("unknown metric family");
}

}  // namespace qmetric
