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

#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "qmetric/channels.hpp"
#include "qmetric/error.hpp"
#include "qmetric/metrics_closed.hpp"
#include "qmetric/metrics_sup.hpp"

namespace qmetric {
namespace {

std::vector<double> diag_of(const DensityMatrix& rho) {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < rho.dim(); ++i) out.push_back(rho.matrix()(i, i).real());
  return out;
}

DensityMatrix random_diagonal(Eigen::Index d, Rng& rng) { return diagonal_state(flat_simplex(d, rng)); }

TEST(UnitaryFromParams, ZeroIsIdentity) {
  EXPECT_LT((unitary_from_params(Eigen::VectorXd::Zero(9)) - Matrix::Identity(3, 3)).norm(), 1e-15);
}

TEST(UnitaryFromParams, AlwaysUnitary) {
  Rng rng(1);
  std::normal_distribution<double> n(0.0, 2.0);
  for (int t = 0; t < 1000; ++t) {
    const Eigen::Index d = 2 + t % 3;
    Eigen::VectorXd theta(d * d);
    for (Eigen::Index i = 0; i < theta.size(); ++i) theta(i) = n(rng);
    const Matrix u = unitary_from_params(theta);
    EXPECT_LT((u.adjoint() * u - Matrix::Identity(d, d)).norm(), 1e-10);
  }
}

TEST(UnitaryFromParams, PauliYRotationFlipsBasisState) {
  // H = (pi/2) Y has H(0,1) = -i pi/2, so the paired parameters are (0, -pi/2).
  Eigen::VectorXd theta(4);
  theta << 0.0, 0.0, 0.0, -std::numbers::pi / 2;
  const Matrix u = unitary_from_params(theta);
  EXPECT_NEAR(std::abs(u(0, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(1, 0)), 1.0, 1e-15);
}

TEST(UnitaryFromParams, RejectsNonSquareLength) {
  EXPECT_THROW(unitary_from_params(Eigen::VectorXd::Zero(5)), DomainError);
  EXPECT_THROW(unitary_from_params(Eigen::VectorXd::Zero(0)), DomainError);
}

TEST(SetPartitions, CountsAreBellNumbers) {
  const std::vector<std::size_t> bell = {1, 2, 5, 15, 52};
  for (Eigen::Index n = 1; n <= 5; ++n) {
    const auto parts = set_partitions(n);
    EXPECT_EQ(parts.size(), bell[static_cast<std::size_t>(n - 1)]);
    EXPECT_EQ(parts.front(), finest_partition(n));
    EXPECT_EQ(parts.size(), testing::all_partitions(static_cast<int>(n)).size());
  }
}

TEST(ProjectionFamily, RejectsBadInputs) {
  const Matrix id = Matrix::Identity(3, 3);
  EXPECT_THROW(ProjectionFamily::from_basis(id, Partition{{0, 1}, {1, 2}}), DomainError);
  EXPECT_THROW(ProjectionFamily::from_basis(id, Partition{{0}, {1}}), DomainError);
  EXPECT_THROW(ProjectionFamily::from_basis(id, Partition{{0}, {1}, {3}}), DomainError);
  EXPECT_THROW(ProjectionFamily::from_basis(2.0 * id, finest_partition(3)), DomainError);
}

TEST(ProjectionFamily, ProjectionsAreOrthogonalAndComplete) {
  Rng rng(2);
  const auto fam = ProjectionFamily::from_basis(haar_unitary(4, rng), Partition{{0, 3}, {1}, {2}});
  Matrix total = Matrix::Zero(4, 4);
  for (const auto& p : fam.projections()) {
    EXPECT_LT((p * p - p).norm(), 1e-12);
    total += p;
  }
  EXPECT_LT((total - Matrix::Identity(4, 4)).norm(), 1e-12);
  EXPECT_LT((fam.projections()[0] * fam.projections()[1]).norm(), 1e-12);
}

TEST(DpObjective, RefinementNeverDecreases) {
  // Splitting a block cannot lower sum_k |a_k^(1/p) - b_k^(1/p)|^p, because
  // (a, b) -> |a^(1/p) - b^(1/p)|^p is subadditive.
  Rng rng(3);
  for (double p : {1.0, 2.0, 3.0}) {
    for (int t = 0; t < 50; ++t) {
      const DensityMatrix rho = random_density(4, 1 + t % 4, rng);
      const DensityMatrix sigma = random_density(4, 4, rng);
      const Matrix u = haar_unitary(4, rng);
      const auto coarse = ProjectionFamily::from_basis(u, Partition{{0, 1}, {2, 3}});
      const auto split = ProjectionFamily::from_basis(u, Partition{{0}, {1}, {2, 3}});
      const auto finest = ProjectionFamily::from_basis(u, finest_partition(4));
      const double a = dp_objective(rho, sigma, coarse, p);
      const double b = dp_objective(rho, sigma, split, p);
      const double c = dp_objective(rho, sigma, finest, p);
      EXPECT_LE(a, b + 1e-12) << p;
      EXPECT_LE(b, c + 1e-12) << p;
    }
  }
}

TEST(RootDifferencePower, ClampsRoundingNoise) {
  EXPECT_EQ(root_difference_power(-1e-13, 0.0, 3.0), 0.0);
  EXPECT_NEAR(root_difference_power(0.25, 0.0, 2.0), 0.25, 1e-15);
}

TEST(DpDiagonal, MatchesBruteForceOracle) {
  Rng rng(4);
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    for (int t = 0; t < 20; ++t) {
      const Eigen::Index d = 2 + t % 3;
      const DensityMatrix rho = random_diagonal(d, rng);
      const DensityMatrix sigma = random_diagonal(d, rng);
      EXPECT_NEAR(dp_diagonal(rho, sigma, p).value,
                  testing::dp_commuting(diag_of(rho), diag_of(sigma), p), 1e-13);
    }
  }
  EXPECT_THROW(dp_diagonal(random_density(2, 2, rng), maximally_mixed(2), 2.0), DomainError);
}

TEST(DpSupremum, IdenticalStatesGiveZero) {
  const DensityMatrix rho = random_density(3, 2, 5);
  EXPECT_EQ(dp_supremum(rho, rho, 2.0, 4, 0).value, 0.0);
}

TEST(DpSupremum, OneEqualsTraceNorm) {
  Rng rng(6);
  for (int t = 0; t < 10; ++t) {
    const Eigen::Index d = 2 + t % 2;
    const DensityMatrix rho = random_density(d, 1 + t % d, rng);
    const DensityMatrix sigma = random_density(d, d, rng);
    EXPECT_NEAR(dp_supremum(rho, sigma, 1.0, default_dp_restarts(d), t).value,
                testing::trace_norm(rho.matrix() - sigma.matrix()), 1e-6);
  }
}

TEST(DpSupremum, TwoEqualsBures) {
  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    const DensityMatrix rho = random_density(2, 2, rng);
    const DensityMatrix sigma = random_density(2, 1 + t % 2, rng);
    const double oracle = std::sqrt(std::max(0.0, 2.0 - 2.0 * testing::trace_norm(
                                                        mat_power(rho.matrix(), 0.5) *
                                                        mat_power(sigma.matrix(), 0.5))));
    EXPECT_NEAR(dp_supremum(rho, sigma, 2.0, 16, t).value, oracle, 1e-4);
  }
}

TEST(DpSupremum, CommutingStatesReduceToDiagonalCase) {
  Rng rng(8);
  for (double p : {1.5, 3.0}) {
    const DensityMatrix rho = random_diagonal(3, rng);
    const DensityMatrix sigma = random_diagonal(3, rng);
    EXPECT_NEAR(dp_supremum(rho, sigma, p, 16, 1).value, dp_diagonal(rho, sigma, p).value, 1e-6);
  }
}

TEST(DpSupremum, IsSymmetric) {
  Rng rng(9);
  for (int t = 0; t < 5; ++t) {
    const DensityMatrix rho = random_density(3, 2, rng);
    const DensityMatrix sigma = random_density(3, 3, rng);
    EXPECT_NEAR(dp_supremum(rho, sigma, 3.0, 16, t).value, dp_supremum(sigma, rho, 3.0, 16, t).value,
                2e-4);
  }
}

TEST(DpSupremum, ReportedFamilyAttainsValue) {
  Rng rng(10);
  const DensityMatrix rho = random_density(3, 3, rng);
  const DensityMatrix sigma = random_density(3, 1, rng);
  const DpResult r = dp_supremum(rho, sigma, 1.5, 8, 3);
  EXPECT_DOUBLE_EQ(dp_objective(rho, sigma, r.family, 1.5), r.value);
  EXPECT_GE(r.restarts_used, 8);
}

TEST(DpSupremum, DominatesAnyFixedFamily) {
  Rng rng(11);
  const DensityMatrix rho = random_density(2, 2, rng);
  const DensityMatrix sigma = random_density(2, 2, rng);
  const double best = dp_supremum(rho, sigma, 3.0, 16, 0).value;
  for (int t = 0; t < 200; ++t) {
    const auto fam = ProjectionFamily::from_basis(haar_unitary(2, rng), finest_partition(2));
    EXPECT_LE(dp_objective(rho, sigma, fam, 3.0), best + 1e-9);
  }
}

TEST(DpSupremum, MonotoneInRestarts) {
  Rng rng(12);
  const DensityMatrix rho = random_density(3, 2, rng);
  const DensityMatrix sigma = random_density(3, 3, rng);
  DpOptions plain;
  plain.spectral_warm_starts = false;
  double previous = 0.0;
  for (int r = 1; r <= 6; ++r) {
    const double v = dp_supremum(rho, sigma, 3.0, r, 42, plain).value;
    EXPECT_GE(v, previous - 1e-12) << r;
    previous = v;
  }
}

TEST(DpSupremum, IsDeterministicAcrossJobCounts) {
  Rng rng(13);
  const DensityMatrix rho = random_density(3, 2, rng);
  const DensityMatrix sigma = random_density(3, 3, rng);
  DpOptions serial;
  DpOptions threaded;
  threaded.jobs = 3;
  EXPECT_EQ(dp_supremum(rho, sigma, 1.5, 6, 9, serial).value,
            dp_supremum(rho, sigma, 1.5, 6, 9, threaded).value);
}

TEST(DpSupremum, RejectsBadArguments) {
  const DensityMatrix a = maximally_mixed(2);
  const DensityMatrix b = diagonal_state(Eigen::Vector2d(0.3, 0.7));
  EXPECT_THROW(dp_supremum(a, b, 0.5, 4, 0), DomainError);
  EXPECT_THROW(dp_supremum(a, b, 2.0, 0, 0), DomainError);
  EXPECT_THROW(dp_supremum(a, maximally_mixed(3), 2.0, 4, 0), DomainError);
}

TEST(PullbackBases, AreUnitary) {
  Rng rng(14);
  const KrausChannel c = random_channel(3, 2, rng);
  const auto fam = ProjectionFamily::from_basis(haar_unitary(3, rng), Partition{{0, 1}, {2}});
  for (const Matrix& b : pullback_bases(c, fam)) {
    EXPECT_LT((b.adjoint() * b - Matrix::Identity(3, 3)).norm(), 1e-10);
  }
}

TEST(PullbackBases, JointBasisTransportsUnitaryFamily) {
  Rng rng(15);
  const Matrix u = haar_unitary(3, rng);
  const KrausChannel c(std::vector<Matrix>{u});
  for (const Partition& part : {Partition{{0}, {1}, {2}}, Partition{{0, 2}, {1}}}) {
    const auto fam = ProjectionFamily::from_basis(haar_unitary(3, rng), part);
    const Matrix b = pullback_bases(c, fam).front();
    for (const Matrix& proj : fam.projections()) {
      Matrix m = b.adjoint() * u.adjoint() * proj * u * b;
      m.diagonal().setZero();
      EXPECT_LT(m.norm(), 1e-10);
    }
  }
}

}  // namespace
}  // namespace qmetric
