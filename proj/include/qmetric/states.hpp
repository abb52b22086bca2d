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
#include <string>

#include "qmetric/matcalc.hpp"
#include "qmetric/random.hpp"

namespace qmetric {

inline constexpr double kTraceTol = 1e-10;

/// A validated quantum state: Hermitian within 1e-12, PSD with eigenvalues
/// >= -1e-10 and unit trace within 1e-10. Instances can only be obtained
/// through validating constructors, so holding one is proof of validity.
class DensityMatrix {
 public:
  /// Validates `entries`. Eigenvalues in [-1e-10, -1e-14) are clamped to zero
  /// and the matrix renormalized. Throws ValidationError naming the invariant
  /// ("square", "dimension", "hermitian", "trace", "psd").
  static DensityMatrix from_matrix(const Matrix& entries, std::string label = {});

  Eigen::Index dim() const noexcept { return entries_.rows(); }
  const Matrix& matrix() const noexcept { return entries_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  double purity() const;
  bool is_diagonal(double tol = 1e-14) const;

 private:
  DensityMatrix(Matrix entries, std::string label)
      : entries_(std::move(entries)), label_(std::move(label)) {}

  Matrix entries_;
  std::string label_;
};

/// Free-function spelling of DensityMatrix::from_matrix.
DensityMatrix new_density(const Matrix& entries, std::string label = {});

/// |phi><phi| / <phi|phi>; throws DomainError on a zero vector.
DensityMatrix pure_state(const ComplexVector& amplitudes);

/// Diagonal state with the given probabilities.
DensityMatrix diagonal_state(const Eigen::VectorXd& probabilities);

/// G G^dagger / Tr(G G^dagger) with G a dim x rank complex Ginibre matrix.
/// Deterministic in (dim, rank, seed).
DensityMatrix random_density(Eigen::Index dim, Eigen::Index rank, std::uint64_t seed);
DensityMatrix random_density(Eigen::Index dim, Eigen::Index rank, Rng& rng);

/// Haar-random pure state.
DensityMatrix random_pure(Eigen::Index dim, Rng& rng);

/// lambda * a + (1 - lambda) * b.
DensityMatrix mix(double lambda, const DensityMatrix& a, const DensityMatrix& b);

/// U rho U^dagger.
DensityMatrix conjugate(const DensityMatrix& rho, const Matrix& unitary);

/// I / dim.
DensityMatrix maximally_mixed(Eigen::Index dim);

/// Bipartite split of a state's index space; the composite index is
/// i_a * dim_b + i_b (A is the slow index).
struct BipartiteShape {
  Eigen::Index dim_a = 0;
  Eigen::Index dim_b = 0;

  Eigen::Index dim() const noexcept { return dim_a * dim_b; }
};

enum class Subsystem { A, B };

/// Kronecker product a (x) b.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on `keep`. Throws DomainError when shape.dim() != rho.dim().
DensityMatrix partial_trace(const DensityMatrix& rho, BipartiteShape shape, Subsystem keep);

/// Partial transpose over subsystem B (no validation of the result, which
/// need not be a state).
Matrix partial_transpose_b(const Matrix& m, BipartiteShape shape);

/// (|00> + |11>) / sqrt(2).
DensityMatrix bell_state();

}  // namespace qmetric
