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

#include "qmetric/channels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qmetric/error.hpp"

namespace qmetric {

namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << what << ": parameter " << p << " outside [0, 1]";
    throw DomainError(os.str());
  }
}

}  // namespace

KrausChannel::KrausChannel(std::vector<Matrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw ValidationError("shape", "channel needs at least one Kraus operator");
  dim_ = kraus_.front().rows();
  if (dim_ < 1 || dim_ > kMaxDim) throw ValidationError("shape", "unsupported channel dimension");
  for (const Matrix& k : kraus_) {
    if (k.rows() != dim_ || k.cols() != dim_) {
      throw ValidationError("shape", "Kraus operators must all be dim x dim");
    }
  }
  if (const double err = completeness_error(); err > kCompletenessTol) {
    std::ostringstream os;
    os << "sum K^dagger K deviates from identity by " << err;
    throw ValidationError("completeness", os.str());
  }
}

double KrausChannel::completeness_error() const {
  Matrix acc = Matrix::Zero(dim_, dim_);
  for (const Matrix& k : kraus_) acc += k.adjoint() * k;
  return (acc - Matrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
}

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  if (rho.dim() != channel.dim()) throw DomainError("apply: dimension mismatch");
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& k : channel.kraus()) out += k * rho.matrix() * k.adjoint();
  return new_density(hermitian_part(out));
}

Matrix adjoint_apply(const KrausChannel& channel, const Matrix& x) {
  if (x.rows() != channel.dim() || x.cols() != channel.dim()) {
    throw DomainError("adjoint_apply: dimension mismatch");
  }
  require_hermitian(x, "observable");
  Matrix out = Matrix::Zero(x.rows(), x.cols());
  for (const Matrix& k : channel.kraus()) out += k.adjoint() * x * k;
  return hermitian_part(out);
}

KrausChannel depolarizing(Eigen::Index dim, double p) {
  require_probability(p, "depolarizing");
  if (dim < 1) throw DomainError("depolarizing: dim must be positive");
  const double d2 = static_cast<double>(dim * dim);
  const std::complex<double> omega = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(dim));
  std::vector<Matrix> kraus;
  for (Eigen::Index a = 0; a < dim; ++a) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      // Weyl operator X^a Z^b.
      Matrix w = Matrix::Zero(dim, dim);
      for (Eigen::Index j = 0; j < dim; ++j) {
        w((j + a) % dim, j) = std::pow(omega, static_cast<double>(b * j));
      }
      const double weight = (a == 0 && b == 0) ? 1.0 - p + p / d2 : p / d2;
      if (weight > 0.0) kraus.push_back(std::sqrt(weight) * w);
    }
  }
  return KrausChannel(std::move(kraus));
}

KrausChannel amplitude_damping(double gamma) {
  require_probability(gamma, "amplitude_damping");
  Matrix k0 = Matrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  Matrix k1 = Matrix::Zero(2, 2);
  k1(0, 1) = std::sqrt(gamma);
  return KrausChannel({k0, k1});
}

KrausChannel dephasing(Eigen::Index dim, double p) {
  require_probability(p, "dephasing");
  if (dim < 1) throw DomainError("dephasing: dim must be positive");
  std::vector<Matrix> kraus;
  if (p < 1.0) kraus.push_back(std::sqrt(1.0 - p) * Matrix::Identity(dim, dim));
  if (p > 0.0) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      Matrix proj = Matrix::Zero(dim, dim);
      proj(i, i) = std::sqrt(p);
      kraus.push_back(std::move(proj));
    }
  }
  return KrausChannel(std::move(kraus));
}

KrausChannel unitary_channel(const Matrix& u) {
  if (u.rows() != u.cols()) throw DomainError("unitary_channel: matrix is not square");
  if ((u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() > 1e-10) {
    throw DomainError("unitary_channel: matrix is not unitary within 1e-10");
  }
  return KrausChannel({u});
}

KrausChannel random_channel(Eigen::Index dim, Eigen::Index env_dim, Rng& rng) {
  if (dim < 1 || dim > kMaxDim) throw DomainError("random_channel: dim out of range");
  if (env_dim < 1) throw DomainError("random_channel: env_dim must be >= 1");
  const Matrix g = ginibre(dim * env_dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix v = qr.householderQ() * Matrix::Identity(dim * env_dim, dim);
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) v.col(k) *= r(k, k) / mag;
  }
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<std::size_t>(env_dim));
  for (Eigen::Index e = 0; e < env_dim; ++e) kraus.push_back(v.middleRows(e * dim, dim));
  return KrausChannel(std::move(kraus));
}

KrausChannel random_channel(Eigen::Index dim, Eigen::Index env_dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_channel(dim, env_dim, rng);
}

}  // namespace qmetric
