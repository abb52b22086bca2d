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
#include "qmetric/entanglement.hpp"
#include "qmetric/error.hpp"

namespace qmetric {
namespace {

DensityMatrix werner(double f) {
  // f |Phi+><Phi+| + (1 - f) I / 4; separable iff f <= 1/3.
  return new_density(f * bell_state().matrix() + (1 - f) * Matrix::Identity(4, 4) / 4.0);
}

ComplexVector bell_vector() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

TEST(PptCheck, SeparatesBellFromProduct) {
  EXPECT_FALSE(ppt_check(bell_state(), {2, 2}));
  EXPECT_TRUE(ppt_check(maximally_mixed(4), {2, 2}));
  EXPECT_TRUE(ppt_check(werner(1.0 / 3.0), {2, 2}));
  EXPECT_FALSE(ppt_check(werner(0.34), {2, 2}));
  EXPECT_THROW(ppt_check(maximally_mixed(6), {2, 3}), DomainError);
}

TEST(SeparableDecomposition, ValidatesTerms) {
  SeparableDecomposition d = random_separable(3, 1);
  EXPECT_NO_THROW(d.validate());
  d.weights[0] += 0.1;
  EXPECT_THROW(d.validate(), ValidationError);
  d = random_separable(3, 1);
  d.factors_a[1] *= 2.0;
  EXPECT_THROW(d.validate(), ValidationError);
  d = random_separable(3, 1);
  d.factors_b.pop_back();
  EXPECT_THROW(d.validate(), ValidationError);
  EXPECT_THROW(random_separable(17, 0), DomainError);
}

TEST(RandomSeparable, AssemblesToPptState) {
  for (int t = 0; t < 50; ++t) {
    const DensityMatrix rho = random_separable(1 + t % 16, t).assemble();
    EXPECT_TRUE(ppt_check(rho, {2, 2}));
  }
}

TEST(ProductDecomposition, ReconstructsSeparableStates) {
  for (int t = 0; t < 100; ++t) {
    const DensityMatrix rho = random_separable(1 + t % 16, 500 + t).assemble();
    const auto d = product_decomposition(rho);
    ASSERT_TRUE(d.has_value()) << t;
    EXPECT_LE(d->size(), 4u);
    EXPECT_LT((d->assemble().matrix() - rho.matrix()).norm(), 1e-8) << t;
  }
  const auto w = product_decomposition(werner(0.2));
  ASSERT_TRUE(w.has_value());
  EXPECT_LT((w->assemble().matrix() - werner(0.2).matrix()).norm(), 1e-9);
}

TEST(ProductDecomposition, RefusesEntangledStates) {
  EXPECT_FALSE(product_decomposition(bell_state()).has_value());
  EXPECT_FALSE(product_decomposition(werner(0.9)).has_value());
}

TEST(GeometricEntanglement, BellBuresMatchesDenseSamplingOracle) {
  // For pure rho, F(rho, sigma)^2 = <Phi|sigma|Phi>, which is maximized over
  // separable sigma at a pure product state.
  const double overlap = testing::max_product_overlap(bell_vector(), 24);
  const double oracle = std::sqrt(2.0 - 2.0 * std::sqrt(overlap));
  const auto r = geometric_entanglement(bell_state(), MetricId::bures(), kDefaultEntanglementRestarts, 0);
  EXPECT_NEAR(r.value, oracle, 5e-3);
  EXPECT_NEAR(r.value, std::sqrt(2.0 - std::sqrt(2.0)), 5e-3);
  EXPECT_TRUE(ppt_check(r.closest.assemble(), {2, 2}));
}

TEST(GeometricEntanglement, BellBrotherTwoIsPositiveWithPptClosestState) {
  const auto r = geometric_entanglement(bell_state(), MetricId::brother(2.0), 8, 1);
  EXPECT_GT(r.value, 0.1);
  EXPECT_TRUE(std::isfinite(r.value));
  EXPECT_TRUE(ppt_check(r.closest.assemble(), {2, 2}));
}

TEST(GeometricEntanglement, TraceLowerBoundFromFidelity) {
  // (1/2)||rho - sigma||_1 >= 1 - F(rho, sigma) and F <= sqrt(1/2) here.
  const auto r = geometric_entanglement(bell_state(), MetricId::trace(), 8, 2);
  EXPECT_GE(r.value, 1.0 - std::sqrt(0.5) - 1e-9);
  EXPECT_LE(r.value, 0.5 + 1e-6);
}

TEST(GeometricEntanglement, SeparableStatesAreAtZero) {
  for (int t = 0; t < 5; ++t) {
    const DensityMatrix rho = random_separable(1 + 3 * t, 900 + t).assemble();
    EXPECT_LE(geometric_entanglement(rho, MetricId::bures(), 8, t).value, 1e-4) << t;
  }
  const DensityMatrix prod = tensor(random_density(2, 1, 3), random_density(2, 2, 4));
  EXPECT_LE(geometric_entanglement(prod, MetricId::trace(), 4, 0).value, 1e-4);
}

TEST(GeometricEntanglement, IsDeterministic) {
  const auto a = geometric_entanglement(werner(0.6), MetricId::bures(), 4, 7);
  const auto b = geometric_entanglement(werner(0.6), MetricId::bures(), 4, 7);
  EXPECT_EQ(a.value, b.value);
}

TEST(GeometricEntanglement, RejectsUnsupportedInputs) {
  EXPECT_THROW(geometric_entanglement(maximally_mixed(3), MetricId::bures(), 4, 0), DomainError);
  EXPECT_THROW(geometric_entanglement(bell_state(), MetricId::fidelity(), 4, 0), DomainError);
  EXPECT_THROW(geometric_entanglement(bell_state(), MetricId::measured(2.0), 4, 0), DomainError);
  EXPECT_THROW(geometric_entanglement(bell_state(), MetricId::bures(), 0, 0), DomainError);
}

}  // namespace
}  // namespace qmetric
