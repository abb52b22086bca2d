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

#include "oracles.hpp"
#include "qmetric/channels.hpp"
#include "qmetric/error.hpp"
#include "qmetric/metrics_closed.hpp"

namespace qmetric {
namespace {

const DensityMatrix& rho_ex() {
  static const DensityMatrix r = diagonal_state(Eigen::Vector2d(0.2, 0.8));
  return r;
}
const DensityMatrix& sigma_ex() {
  static const DensityMatrix s = diagonal_state(Eigen::Vector2d(0.4, 0.6));
  return s;
}

TEST(ExampleStates, TraceMetric) { EXPECT_NEAR(trace_metric(rho_ex(), sigma_ex()), 0.2, 1e-15); }

TEST(ExampleStates, BrotherMetricMatchesCommutingFormula) {
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    EXPECT_NEAR(brother_metric(rho_ex(), sigma_ex(), p),
                testing::brother_commuting({0.2, 0.8}, {0.4, 0.6}, p), 1e-13)
        << p;
  }
  EXPECT_NEAR(brother_metric(rho_ex(), sigma_ex(), 1.0), 0.4, 1e-14);
  const double f = std::sqrt(0.2 * 0.4) + std::sqrt(0.8 * 0.6);
  EXPECT_NEAR(brother_metric(rho_ex(), sigma_ex(), 2.0), std::sqrt(2.0 - 2.0 * f), 1e-13);
  EXPECT_NEAR(brother_metric(rho_ex(), sigma_ex(), 2.0), 0.2206, 5e-5);
}

TEST(ExampleStates, AFidelity) {
  const double expected = std::pow(std::sqrt(0.08) + std::sqrt(0.48), 2);
  EXPECT_NEAR(a_fidelity(rho_ex(), sigma_ex()), expected, 1e-14);
}

TEST(Fidelity, AgreesWithSingularValueOracle) {
  Rng rng(1);
  for (int t = 0; t < 30; ++t) {
    const Eigen::Index d = 2 + t % 3;
    const DensityMatrix rho = random_density(d, d, rng);
    const DensityMatrix sigma = random_density(d, d, rng);
    EXPECT_NEAR(fidelity(rho, sigma), testing::fidelity_svd(rho.matrix(), sigma.matrix()), 1e-9);
  }
}

TEST(Fidelity, PureStatesGiveOverlapModulus) {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    ComplexVector a = ginibre(3, 1, rng).col(0).normalized();
    ComplexVector b = ginibre(3, 1, rng).col(0).normalized();
    EXPECT_NEAR(fidelity(pure_state(a), pure_state(b)), std::abs(a.dot(b)), 1e-7);
  }
}

TEST(Fidelity, IdenticalStatesGiveOne) {
  Rng rng(3);
  const DensityMatrix rho = random_density(3, 2, rng);
  EXPECT_NEAR(fidelity(rho, rho), 1.0, 1e-9);
  EXPECT_NEAR(bures_metric(rho, rho), 0.0, 1e-4);
  EXPECT_NEAR(a_fidelity(rho, rho), 1.0, 1e-12);
}

TEST(BuresMetric, IsSqrtTwoMinusTwoF) {
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix rho = random_density(2, 2, rng);
    const DensityMatrix sigma = random_density(2, 2, rng);
    EXPECT_NEAR(bures_metric(rho, sigma), std::sqrt(2.0 - 2.0 * fidelity(rho, sigma)), 1e-14);
  }
}

TEST(AFidelity, PureStatesGiveFourthPowerOfOverlap) {
  // sqrt of a pure state is itself, so Tr(sqrt rho sqrt sigma) = |<a|b>|^2
  // and its square is |<a|b>|^4.
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    ComplexVector a = ginibre(2 + t % 2, 1, rng).col(0).normalized();
    ComplexVector b = ginibre(2 + t % 2, 1, rng).col(0).normalized();
    const double o2 = testing::overlap2(a, b);
    EXPECT_NEAR(a_fidelity(pure_state(a), pure_state(b)), o2 * o2, 1e-10);
  }
}

TEST(AFidelity, LiesInUnitInterval) {
  Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    const double f = a_fidelity(random_density(3, 1 + t % 3, rng), random_density(3, 2, rng));
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0 + 1e-12);
  }
}

TEST(AFidelity, DoesNotDecreaseUnderChannels) {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    const DensityMatrix rho = random_density(2, 2, rng);
    const DensityMatrix sigma = random_density(2, 2, rng);
    const KrausChannel c = random_channel(2, 1 + t % 3, rng);
    EXPECT_GE(a_fidelity(apply(c, rho), apply(c, sigma)), a_fidelity(rho, sigma) - 1e-9);
  }
}

TEST(BrotherMetric, ClosedFormIdentities) {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index d = 2 + t % 2;
    const DensityMatrix rho = random_density(d, 1 + t % d, rng);
    const DensityMatrix sigma = random_density(d, d, rng);
    EXPECT_NEAR(brother_metric(rho, sigma, 1.0), testing::trace_norm(rho.matrix() - sigma.matrix()),
                1e-9);
    const double d2 = brother_metric(rho, sigma, 2.0);
    EXPECT_NEAR(d2 * d2, 2.0 - 2.0 * std::sqrt(a_fidelity(rho, sigma)), 1e-9);
  }
}

TEST(BrotherMetric, IsUnitarilyInvariant) {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix rho = random_density(3, 2, rng);
    const DensityMatrix sigma = random_density(3, 3, rng);
    const Matrix u = haar_unitary(3, rng);
    EXPECT_NEAR(brother_metric(conjugate(rho, u), conjugate(sigma, u), 3.0),
                brother_metric(rho, sigma, 3.0), 1e-9);
  }
}

TEST(BrotherMetric, TriangleInequality) {
  Rng rng(10);
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    for (int t = 0; t < 50; ++t) {
      const DensityMatrix a = random_density(2, 1 + t % 2, rng);
      const DensityMatrix b = random_density(2, 2, rng);
      const DensityMatrix c = random_density(2, 1, rng);
      EXPECT_LE(brother_metric(a, c, p), brother_metric(a, b, p) + brother_metric(b, c, p) + 1e-9);
    }
  }
}

TEST(BrotherMetric, RejectsSmallExponentAndMismatch) {
  EXPECT_THROW(brother_metric(rho_ex(), sigma_ex(), 0.5), DomainError);
  EXPECT_THROW(brother_metric(rho_ex(), maximally_mixed(3), 2.0), DomainError);
  EXPECT_THROW(a_fidelity(rho_ex(), maximally_mixed(3)), DomainError);
}

TEST(MetricId, ParsesNamesAndRequiresExponent) {
  EXPECT_EQ(MetricId::parse("trace"), MetricId::trace());
  EXPECT_EQ(MetricId::parse("Dp", 3.0), MetricId::brother(3.0));
  EXPECT_EQ(MetricId::parse("dp", 2.0), MetricId::measured(2.0));
  EXPECT_THROW(MetricId::parse("Dp"), Error);
  EXPECT_THROW(MetricId::parse("trace", 2.0), Error);
  EXPECT_THROW(MetricId::parse("hellinger"), Error);
  EXPECT_THROW(MetricId::brother(0.9), DomainError);
}

TEST(EvaluateClosed, DispatchesAndRefusesMeasured) {
  EXPECT_NEAR(evaluate_closed(MetricId::trace(), rho_ex(), sigma_ex()), 0.2, 1e-15);
  EXPECT_NEAR(evaluate_closed(MetricId::brother(1.0), rho_ex(), sigma_ex()), 0.4, 1e-14);
  EXPECT_THROW(evaluate_closed(MetricId::measured(2.0), rho_ex(), sigma_ex()), DomainError);
}

}  // namespace
}  // namespace qmetric
