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
#include <vector>

#include "qmetric/states.hpp"

namespace qmetric {

inline constexpr double kCompletenessTol = 1e-10;

/// A completely positive trace-preserving map in Kraus form,
/// T(rho) = sum_k K_k rho K_k^dagger with sum_k K_k^dagger K_k = I.
/// Input and output dimensions are equal.
class KrausChannel {
 public:
  /// Throws ValidationError("completeness") or ValidationError("shape").
  explicit KrausChannel(std::vector<Matrix> kraus);

  Eigen::Index dim() const noexcept { return dim_; }
  const std::vector<Matrix>& kraus() const noexcept { return kraus_; }

  /// Largest entry of |sum_k K_k^dagger K_k - I|.
  double completeness_error() const;

 private:
  Eigen::Index dim_ = 0;
  std::vector<Matrix> kraus_;
};

/// sum_k K_k rho K_k^dagger.
DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);

/// The Hilbert-Schmidt adjoint sum_k K_k^dagger X K_k. Unital for every
/// trace-preserving channel and positive on PSD inputs.
Matrix adjoint_apply(const KrausChannel& channel, const Matrix& x);

/// rho -> (1 - p) rho + p I / dim, built from the dim^2 Weyl operators.
KrausChannel depolarizing(Eigen::Index dim, double p);

/// Qubit amplitude damping with decay probability gamma.
KrausChannel amplitude_damping(double gamma);

/// rho -> (1 - p) rho + p diag(rho).
KrausChannel dephasing(Eigen::Index dim, double p);

/// rho -> U rho U^dagger.
KrausChannel unitary_channel(const Matrix& u);

/// Random channel from the Kraus blocks of a Haar-like isometry
/// V: C^dim -> C^(dim * env_dim). env_dim = 1 yields a random unitary channel.
KrausChannel random_channel(Eigen::Index dim, Eigen::Index env_dim, std::uint64_t seed);
KrausChannel random_channel(Eigen::Index dim, Eigen::Index env_dim, Rng& rng);

}  // namespace qmetric
