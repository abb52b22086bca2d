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

#include <vector>

#include "qmetric/matcalc.hpp"
#include "qmetric/states.hpp"

namespace qmetric {

inline constexpr double kPrefixTol = 1e-10;

/// Outcome of comparing descending prefix sums of `lhs` against `rhs`.
struct MajorizationReport {
  SpectrumVector lhs;
  SpectrumVector rhs;
  std::vector<double> prefix_gaps;  // sum_{i<=k} lhs_i - sum_{i<=k} rhs_i
  bool holds = false;               // every gap >= -1e-10

  /// Index of the first failing prefix, or -1.
  int first_failure() const;
  double worst_gap() const;
};

/// Does `x` weakly majorize `y` (y \prec_w x)? Shorter vectors are padded
/// with zeros.
MajorizationReport weak_majorizes(const SpectrumVector& x, const SpectrumVector& y);

/// Weak majorization plus equal totals within 1e-10.
bool majorizes(const SpectrumVector& x, const SpectrumVector& y);

/// The ordering between the spectra of |rho^(1/q) - sigma^(1/q)|^q and
/// |rho^(1/p) - sigma^(1/p)|^p for 1 <= p <= q, and its trace corollary
/// (D_q)^q <= (D_p)^p.
struct Theorem4Report {
  MajorizationReport majorization;  // lhs: p-spectrum, rhs: q-spectrum
  double dq_power_q = 0.0;
  double dp_power_p = 0.0;
  bool corollary_holds = false;  // dq_power_q <= dp_power_p + 1e-9

  bool holds() const { return majorization.holds && corollary_holds; }
};

Theorem4Report theorem4_check(const DensityMatrix& rho, const DensityMatrix& sigma, double p,
                              double q);

/// Ando's inequality for f(t) = t^r, 0 < r <= 1: does lambda(f(|A - B|))
/// weakly majorize lambda(|f(A) - f(B)|)? A and B must be PSD.
MajorizationReport ando_check(const Matrix& a, const Matrix& b, double r);

enum class NielsenVerdict { kConsistentWithSeparable, kEntangledDetected };

/// Separable states are majorized by both of their marginals; failure of
/// either comparison certifies entanglement. Necessary, not sufficient.
NielsenVerdict nielsen_criterion(const DensityMatrix& rho, BipartiteShape shape);

}  // namespace qmetric
