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

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qmetric {

using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using ComplexVector = Eigen::VectorXcd;

/// Entrywise tolerance for H(i,j) == conj(H(j,i)).
inline constexpr double kHermitianTol = 1e-12;
/// Eigenvalues in [-kPsdTol, 0) are treated as zero; anything below is an error.
inline constexpr double kPsdTol = 1e-10;
/// Relative eigenvalue noise floor zeroed before fractional powers.
inline constexpr double kSpectralNoise = 1e-14;
/// Largest supported Hilbert-space dimension.
inline constexpr Eigen::Index kMaxDim = 16;

/// Real eigenvalues sorted in descending order. Construction from an
/// unsorted vector sorts stably, so ties keep their input order.
class SpectrumVector {
 public:
  SpectrumVector() = default;
  explicit SpectrumVector(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double sum() const;

 private:
  std::vector<double> values_;
};

struct EigenSystem {
  SpectrumVector spectrum;
  Matrix basis;  // column k is the eigenvector of spectrum[k]
};

bool is_hermitian(const Matrix& h, double tol = kHermitianTol);

/// Throws ValidationError("hermitian") when `h` is not square and Hermitian.
void require_hermitian(const Matrix& h, std::string_view what = "matrix");

/// (h + h^dagger) / 2.
Matrix hermitian_part(const Matrix& h);

/// Eigendecomposition of a Hermitian matrix, spectrum descending.
EigenSystem eigh(const Matrix& h);

/// Eigenvalues only, descending.
SpectrumVector eigenvalues(const Matrix& h);

/// basis * diag(f(spectrum)) * basis^dagger, Hermitian by construction.
Matrix spectral_map(const EigenSystem& sys, const std::function<double(double)>& f);

/// A^r for PSD A and r > 0. Eigenvalues within kPsdTol below zero are
/// clamped; lower ones raise ValidationError("psd").
Matrix mat_power(const Matrix& a, double r);

/// |H| = sqrt(H^dagger H) for Hermitian H.
Matrix mat_abs(const Matrix& h);

/// (sum_i s_i^p)^(1/p) over the singular values of `a`; p >= 1.
double schatten_norm(const Matrix& a, double p);

/// sum_i |lambda_i|^p for Hermitian `h` (the p-th power of its Schatten norm).
double hermitian_schatten_power(const Matrix& h, double p);

/// min eigenvalue >= -tol.
bool is_psd(const Matrix& h, double tol);
bool is_psd(const RealMatrix& h, double tol);

/// Clamps the PSD noise of a spectrum and zeroes the relative noise floor.
/// Throws ValidationError("psd") on a genuinely negative eigenvalue.
std::vector<double> clamp_psd_spectrum(const SpectrumVector& spectrum);

}  // namespace qmetric
