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

#include "qmetric/states.hpp"

#include <cmath>
#include <sstream>

#include "qmetric/error.hpp"

namespace qmetric {

DensityMatrix DensityMatrix::from_matrix(const Matrix& entries, std::string label) {
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    std::ostringstream os;
    os << "state matrix is " << entries.rows() << "x" << entries.cols();
    throw ValidationError("square", os.str());
  }
  if (entries.rows() > kMaxDim) {
    throw ValidationError("dimension", "dimensions above 16 are not supported");
  }
  require_hermitian(entries, "state");
  const double trace = entries.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    std::ostringstream os;
    os.precision(17);
    os << "trace is " << trace << ", expected 1 within 1e-10";
    throw ValidationError("trace", os.str());
  }
  EigenSystem sys = eigh(entries);
  if (sys.spectrum.values().back() < -kPsdTol) {
    std::ostringstream os;
    os << "minimum eigenvalue " << sys.spectrum.values().back() << " below -1e-10";
    throw ValidationError("psd", os.str());
  }
  // Rounding-level negatives are left alone so that reloading a stored state
  // reproduces it exactly; fractional powers clamp them anyway.
  if (sys.spectrum.values().back() < -kSpectralNoise) {
    Matrix fixed = spectral_map(sys, [](double v) { return std::max(v, 0.0); });
    fixed /= fixed.trace().real();
    return DensityMatrix(hermitian_part(fixed), std::move(label));
  }
  return DensityMatrix(hermitian_part(entries), std::move(label));
}

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

bool DensityMatrix::is_diagonal(double tol) const {
  for (Eigen::Index i = 0; i < dim(); ++i) {
    for (Eigen::Index j = 0; j < dim(); ++j) {
      if (i != j && std::abs(entries_(i, j)) > tol) return false;
    }
  }
  return true;
}

DensityMatrix new_density(const Matrix& entries, std::string label) {
  return DensityMatrix::from_matrix(entries, std::move(label));
}

DensityMatrix pure_state(const ComplexVector& amplitudes) {
  const double norm = amplitudes.norm();
  if (amplitudes.size() == 0 || norm == 0.0) throw DomainError("pure_state: zero vector");
  const ComplexVector v = amplitudes / norm;
  return new_density(v * v.adjoint());
}

DensityMatrix diagonal_state(const Eigen::VectorXd& probabilities) {
  return new_density(probabilities.cast<std::complex<double>>().asDiagonal());
}

DensityMatrix random_density(Eigen::Index dim, Eigen::Index rank, Rng& rng) {
  if (dim < 1 || dim > kMaxDim) throw DomainError("random_density: dim out of range");
  if (rank < 1 || rank > dim) throw DomainError("random_density: rank must be in [1, dim]");
  const Matrix g = ginibre(dim, rank, rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return new_density(hermitian_part(m));
}

DensityMatrix random_density(Eigen::Index dim, Eigen::Index rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

DensityMatrix random_pure(Eigen::Index dim, Rng& rng) { return random_density(dim, 1, rng); }

DensityMatrix mix(double lambda, const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("mix: dimension mismatch");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("mix: lambda outside [0, 1]");
  return new_density(lambda * a.matrix() + (1.0 - lambda) * b.matrix());
}

DensityMatrix conjugate(const DensityMatrix& rho, const Matrix& unitary) {
  if (unitary.rows() != rho.dim() || unitary.cols() != rho.dim()) {
    throw DomainError("conjugate: dimension mismatch");
  }
  return new_density(hermitian_part(unitary * rho.matrix() * unitary.adjoint()));
}

DensityMatrix maximally_mixed(Eigen::Index dim) {
  return new_density(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const Eigen::Index da = a.dim();
  const Eigen::Index db = b.dim();
  Matrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
    }
  }
  return new_density(out);
}

DensityMatrix partial_trace(const DensityMatrix& rho, BipartiteShape shape, Subsystem keep) {
  if (shape.dim_a < 1 || shape.dim_b < 1 || shape.dim() != rho.dim()) {
    throw DomainError("partial_trace: shape does not match state dimension");
  }
  const Eigen::Index da = shape.dim_a;
  const Eigen::Index db = shape.dim_b;
  const Matrix& m = rho.matrix();
  if (keep == Subsystem::A) {
    Matrix out = Matrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i)
      for (Eigen::Index j = 0; j < da; ++j)
        for (Eigen::Index k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return new_density(out);
  }
  Matrix out = Matrix::Zero(db, db);
  for (Eigen::Index i = 0; i < db; ++i)
    for (Eigen::Index j = 0; j < db; ++j)
      for (Eigen::Index k = 0; k < da; ++k) out(i, j) += m(k * db + i, k * db + j);
  return new_density(out);
}

Matrix partial_transpose_b(const Matrix& m, BipartiteShape shape) {
  if (shape.dim() != m.rows() || m.rows() != m.cols()) {
    throw DomainError("partial_transpose_b: shape does not match matrix");
  }
  const Eigen::Index da = shape.dim_a;
  const Eigen::Index db = shape.dim_b;
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index a1 = 0; a1 < da; ++a1)
    for (Eigen::Index b1 = 0; b1 < db; ++b1)
      for (Eigen::Index a2 = 0; a2 < da; ++a2)
        for (Eigen::Index b2 = 0; b2 < db; ++b2)
          out(a1 * db + b1, a2 * db + b2) = m(a1 * db + b2, a2 * db + b1);
  return out;
}

DensityMatrix bell_state() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = 1.0;
  v(3) = 1.0;
  return pure_state(v);
}

}  // namespace qmetric
