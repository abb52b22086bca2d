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

#include "qmetric/majorization.hpp"

#include <algorithm>
#include <cmath>

#include "qmetric/error.hpp"

namespace qmetric {

namespace {

std::vector<double> padded(const SpectrumVector& v, std::size_t n) {
  std::vector<double> out = v.values();
  out.resize(n, 0.0);
  return out;
}

SpectrumVector powered_abs_spectrum(const Matrix& h, double exponent) {
  std::vector<double> vals = eigenvalues(h).values();
  for (double& v : vals) v = std::pow(std::abs(v), exponent);
  return SpectrumVector(std::move(vals));
}

void require_psd(const Matrix& m, const char* what) {
  require_hermitian(m, what);
  if (!is_psd(m, kPsdTol)) throw ValidationError("psd", std::string(what) + " is not PSD");
}

}  // namespace

int MajorizationReport::first_failure() const {
  for (std::size_t k = 0; k < prefix_gaps.size(); ++k) {
    if (prefix_gaps[k] < -kPrefixTol) return static_cast<int>(k);
  }
  return -1;
}

double MajorizationReport::worst_gap() const {
  return prefix_gaps.empty() ? 0.0 : *std::min_element(prefix_gaps.begin(), prefix_gaps.end());
}

MajorizationReport weak_majorizes(const SpectrumVector& x, const SpectrumVector& y) {
  const std::size_t n = std::max(x.size(), y.size());
  // Zero padding can reorder a vector with negative entries, so re-sort.
  MajorizationReport report{SpectrumVector(padded(x, n)), SpectrumVector(padded(y, n)), {}, true};
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sx += report.lhs[k];
    sy += report.rhs[k];
    report.prefix_gaps.push_back(sx - sy);
    if (sx - sy < -kPrefixTol) report.holds = false;
  }
  return report;
}

bool majorizes(const SpectrumVector& x, const SpectrumVector& y) {
  return weak_majorizes(x, y).holds && std::abs(x.sum() - y.sum()) <= kPrefixTol;
}

Theorem4Report theorem4_check(const DensityMatrix& rho, const DensityMatrix& sigma, double p,
                              double q) {
  if (rho.dim() != sigma.dim()) throw DomainError("theorem4_check: dimension mismatch");
  if (!(p >= 1.0)) throw DomainError("theorem4_check: p must be >= 1");
  if (!(q >= p)) throw DomainError("theorem4_check: requires p <= q");
  auto root_diff = [&](double e) {
    return hermitian_part(mat_power(rho.matrix(), 1.0 / e) - mat_power(sigma.matrix(), 1.0 / e));
  };
  const SpectrumVector lp = powered_abs_spectrum(root_diff(p), p);
  const SpectrumVector lq = powered_abs_spectrum(root_diff(q), q);
  Theorem4Report report;
  report.majorization = weak_majorizes(lp, lq);
  report.dp_power_p = lp.sum();
  report.dq_power_q = lq.sum();
  report.corollary_holds = report.dq_power_q <= report.dp_power_p + 1e-9;
  return report;
}

MajorizationReport ando_check(const Matrix& a, const Matrix& b, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("ando_check: r must lie in (0, 1]");
  require_psd(a, "A");
  require_psd(b, "B");
  if (a.rows() != b.rows()) throw DomainError("ando_check: dimension mismatch");
  const SpectrumVector of_difference = powered_abs_spectrum(hermitian_part(a - b), r);
  const SpectrumVector difference_of =
      powered_abs_spectrum(hermitian_part(mat_power(a, r) - mat_power(b, r)), 1.0);
  return weak_majorizes(of_difference, difference_of);
}

NielsenVerdict nielsen_criterion(const DensityMatrix& rho, BipartiteShape shape) {
  if (shape.dim_a < 1 || shape.dim_b < 1 || shape.dim() != rho.dim()) {
    throw DomainError("nielsen_criterion: shape does not match state dimension");
  }
  const SpectrumVector whole = eigenvalues(rho.matrix());
  const SpectrumVector marg_a = eigenvalues(partial_trace(rho, shape, Subsystem::A).matrix());
  const SpectrumVector marg_b = eigenvalues(partial_trace(rho, shape, Subsystem::B).matrix());
  // rho_A \succ rho: the marginal's prefix sums dominate.
  if (!majorizes(marg_a, whole) || !majorizes(marg_b, whole)) {
    return NielsenVerdict::kEntangledDetected;
  }
  return NielsenVerdict::kConsistentWithSeparable;
}

}  // namespace qmetric
