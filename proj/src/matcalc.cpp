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

#include "qmetric/matcalc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qmetric/error.hpp"

namespace qmetric {

SpectrumVector::SpectrumVector(std::vector<double> values) : values_(std::move(values)) {
  std::stable_sort(values_.begin(), values_.end(), std::greater<>());
}

double SpectrumVector::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

bool is_hermitian(const Matrix& h, double tol) {
  if (h.rows() != h.cols()) return false;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = i; j < h.cols(); ++j) {
      if (std::abs(h(i, j) - std::conj(h(j, i))) > tol) return false;
    }
  }
  return true;
}

void require_hermitian(const Matrix& h, std::string_view what) {
  if (h.rows() != h.cols()) {
    std::ostringstream os;
    os << what << " is " << h.rows() << "x" << h.cols() << ", expected square";
    throw ValidationError("square", os.str());
  }
  if (!is_hermitian(h)) {
    throw ValidationError("hermitian", std::string(what) + " is not Hermitian within 1e-12");
  }
}

Matrix hermitian_part(const Matrix& h) { return (h + h.adjoint()) * 0.5; }

EigenSystem eigh(const Matrix& h) {
  require_hermitian(h);
  const Eigen::Index n = h.rows();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(h));
  // Eigen returns ascending order; reverse, then stable-sort to break
  // any residual ties by that order.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.rbegin(), order.rend(), Eigen::Index{0});
  const auto& evals = solver.eigenvalues();
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return evals(a) > evals(b); });
  std::vector<double> values;
  values.reserve(order.size());
  Matrix basis(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    values.push_back(evals(order[static_cast<std::size_t>(k)]));
    basis.col(k) = solver.eigenvectors().col(order[static_cast<std::size_t>(k)]);
  }
  return {SpectrumVector(std::move(values)), std::move(basis)};
}

SpectrumVector eigenvalues(const Matrix& h) {
  require_hermitian(h);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(h), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return SpectrumVector(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

Matrix spectral_map(const EigenSystem& sys, const std::function<double(double)>& f) {
  const auto& vals = sys.spectrum.values();
  Eigen::VectorXd mapped(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) mapped(static_cast<Eigen::Index>(i)) = f(vals[i]);
  Matrix out = sys.basis * mapped.cast<std::complex<double>>().asDiagonal() * sys.basis.adjoint();
  return hermitian_part(out);
}

std::vector<double> clamp_psd_spectrum(const SpectrumVector& spectrum) {
  std::vector<double> vals = spectrum.values();
  if (vals.empty()) return vals;
  const double scale = std::max(1.0, std::abs(vals.front()));
  for (double& v : vals) {
    if (v < -kPsdTol) {
      std::ostringstream os;
      os << "eigenvalue " << v << " below -1e-10";
      throw ValidationError("psd", os.str());
    }
    if (v < kSpectralNoise * scale) v = 0.0;
  }
  return vals;
}

Matrix mat_power(const Matrix& a, double r) {
  if (!(r > 0.0)) throw DomainError("mat_power: exponent must be positive");
  EigenSystem sys = eigh(a);
  const std::vector<double> clamped = clamp_psd_spectrum(sys.spectrum);
  Eigen::VectorXd mapped(static_cast<Eigen::Index>(clamped.size()));
  for (std::size_t i = 0; i < clamped.size(); ++i) {
    mapped(static_cast<Eigen::Index>(i)) = clamped[i] == 0.0 ? 0.0 : std::pow(clamped[i], r);
  }
  return hermitian_part(sys.basis * mapped.cast<std::complex<double>>().asDiagonal() *
                        sys.basis.adjoint());
}

Matrix mat_abs(const Matrix& h) {
  return spectral_map(eigh(h), [](double x) { return std::abs(x); });
}

double schatten_norm(const Matrix& a, double p) {
  if (!(p >= 1.0)) throw DomainError("schatten_norm: p must be >= 1");
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) acc += std::pow(s(i), p);
  return std::pow(acc, 1.0 / p);
}

double hermitian_schatten_power(const Matrix& h, double p) {
  if (!(p >= 1.0)) throw DomainError("hermitian_schatten_power: p must be >= 1");
  const SpectrumVector spectrum = eigenvalues(h);
  double acc = 0.0;
  for (double v : spectrum.values()) acc += std::pow(std::abs(v), p);
  return acc;
}

bool is_psd(const Matrix& h, double tol) {
  const SpectrumVector s = eigenvalues(h);
  return s.size() == 0 || s.values().back() >= -tol;
}

bool is_psd(const RealMatrix& h, double tol) {
  return is_psd(Matrix(h.cast<std::complex<double>>()), tol);
}

}  // namespace qmetric
