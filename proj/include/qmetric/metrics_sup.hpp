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

#include "qmetric/channels.hpp"
#include "qmetric/states.hpp"

namespace qmetric {

/// Disjoint index blocks covering {0, ..., dim - 1}.
using Partition = std::vector<std::vector<Eigen::Index>>;

inline constexpr double kProjectionTol = 1e-9;

/// A finite family of mutually orthogonal projections summing to the
/// identity, stored together with the orthonormal basis and index partition
/// that generate it: P_k = sum_{i in block_k} |u_i><u_i|.
class ProjectionFamily {
 public:
  ProjectionFamily() = default;

  /// Throws DomainError for overlapping or incomplete blocks or a basis that
  /// is not unitary; ValidationError("projection") if the assembled family
  /// breaks idempotence, orthogonality or completeness beyond 1e-9.
  static ProjectionFamily from_basis(const Matrix& basis, Partition partition);

  Eigen::Index dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const Partition& partition() const noexcept { return partition_; }
  const std::vector<Matrix>& projections() const noexcept { return projections_; }

 private:
  Matrix basis_;
  Partition partition_;
  std::vector<Matrix> projections_;
};

ProjectionFamily family_from_basis(const Matrix& basis, const Partition& partition);

/// Every block a singleton, in index order.
Partition finest_partition(Eigen::Index dim);

/// All set partitions of {0, ..., n - 1} (Bell(n) of them), finest first.
std::vector<Partition> set_partitions(Eigen::Index n);

/// |a^(1/p) - b^(1/p)|^p for probabilities clamped to [0, 1].
double root_difference_power(double a, double b, double p);

/// (sum_k |(Tr rho P_k)^(1/p) - (Tr sigma P_k)^(1/p)|^p)^(1/p).
double dp_objective(const DensityMatrix& rho, const DensityMatrix& sigma,
                    const ProjectionFamily& family, double p);

/// exp(i H(theta)) where H has diagonal theta[0..dim) and upper off-diagonal
/// entries theta[k] + i theta[k + 1] taken row by row. theta.size() must be
/// a perfect square dim^2.
Matrix unitary_from_params(const Eigen::VectorXd& theta);

struct DpOptions {
  /// Start from the eigenbases of rho - sigma, rho^(1/p) - sigma^(1/p), rho
  /// and sigma in addition to the Haar-random restarts.
  bool spectral_warm_starts = true;
  /// Extra starting bases (e.g. pulled back from a channel output).
  std::vector<Matrix> warm_starts;
  /// Nelder-Mead budget per start is evaluations_per_param * dim^2.
  int evaluations_per_param = 400;
  double tolerance = 1e-8;
  int jobs = 1;
};

struct DpResult {
  double value = 0.0;
  ProjectionFamily family;
  int restarts_used = 0;
  bool converged = false;
};

/// Default number of random restarts for a given dimension.
int default_dp_restarts(Eigen::Index dim);

/// Lower bound on d_p(rho, sigma) from multi-start derivative-free ascent over
/// (orthonormal basis x set partition). Partitions are enumerated exhaustively
/// for dim <= 4. Deterministic in (rho, sigma, p, restarts, seed, options).
DpResult dp_supremum(const DensityMatrix& rho, const DensityMatrix& sigma, double p,
                     int restarts, std::uint64_t seed, const DpOptions& options = {});

/// Exact d_p for commuting diagonal states: the computational basis is
/// optimal, so only the partitions need enumerating.
DpResult dp_diagonal(const DensityMatrix& rho, const DensityMatrix& sigma, double p);

/// Candidate bases on the input side of `channel` derived from the adjoint
/// images T^*(P_k) of an output-side family: first the eigenbasis of
/// sum_k (k+1) T^*(P_k), then the eigenbasis of each image.
std::vector<Matrix> pullback_bases(const KrausChannel& channel, const ProjectionFamily& family);

}  // namespace qmetric
