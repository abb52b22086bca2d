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

#include "qmetric/entanglement.hpp"
#include "qmetric/error.hpp"
#include "qmetric/majorization.hpp"
#include "qmetric/metrics_closed.hpp"

namespace qmetric {
namespace {

TEST(WeakMajorizes, ComparesPrefixSums) {
  const SpectrumVector x({0.7, 0.3});
  const SpectrumVector y({0.5, 0.5});
  const auto r = weak_majorizes(x, y);
  EXPECT_TRUE(r.holds);
  EXPECT_NEAR(r.prefix_gaps[0], 0.2, 1e-15);
  EXPECT_EQ(r.first_failure(), -1);
  const auto back = weak_majorizes(y, x);
  EXPECT_FALSE(back.holds);
  EXPECT_EQ(back.first_failure(), 0);
  EXPECT_NEAR(back.worst_gap(), -0.2, 1e-15);
}

TEST(WeakMajorizes, PadsShorterVector) {
  const auto r = weak_majorizes(SpectrumVector({1.0}), SpectrumVector({0.4, 0.3, 0.3}));
  EXPECT_EQ(r.prefix_gaps.size(), 3u);
  EXPECT_TRUE(r.holds);
}

TEST(Majorizes, RequiresEqualTotals) {
  EXPECT_TRUE(majorizes(SpectrumVector({1.0, 0.0}), SpectrumVector({0.5, 0.5})));
  EXPECT_FALSE(majorizes(SpectrumVector({1.0, 0.1}), SpectrumVector({0.5, 0.5})));
}

TEST(Theorem4, HoldsOnRandomPairs) {
  Rng rng(1);
  const std::vector<std::pair<double, double>> pairs = {{1, 2}, {1, 3}, {2, 3}, {1.5, 2.5}};
  for (int t = 0; t < 200; ++t) {
    const auto& [p, q] = pairs[static_cast<std::size_t>(t) % pairs.size()];
    const Eigen::Index d = 2 + t % 3;
    const DensityMatrix rho = random_density(d, 1 + t % d, rng);
    const DensityMatrix sigma = random_density(d, d, rng);
    const auto r = theorem4_check(rho, sigma, p, q);
    EXPECT_TRUE(r.holds()) << t;
    EXPECT_NEAR(r.dp_power_p, std::pow(brother_metric(rho, sigma, p), p), 1e-10);
  }
}

TEST(Theorem4, RejectsBadExponents) {
  const DensityMatrix a = maximally_mixed(2);
  EXPECT_THROW(theorem4_check(a, a, 2.0, 1.0), DomainError);
  EXPECT_THROW(theorem4_check(a, a, 0.5, 1.0), DomainError);
}

TEST(Ando, HoldsForOperatorMonotonePowers) {
  Rng rng(2);
  for (double r : {0.25, 0.5, 1.0 / 3.0, 1.0}) {
    for (int t = 0; t < 30; ++t) {
      const Matrix a = random_density(3, 3, rng).matrix();
      const Matrix b = random_density(3, 1 + t % 3, rng).matrix();
      EXPECT_TRUE(ando_check(a, b, r).holds) << r;
    }
  }
  EXPECT_THROW(ando_check(Matrix::Identity(2, 2), Matrix::Identity(2, 2), 1.5), DomainError);
}

TEST(Nielsen, DetectsBellState) {
  EXPECT_EQ(nielsen_criterion(bell_state(), {2, 2}), NielsenVerdict::kEntangledDetected);
}

TEST(Nielsen, AcceptsProductAndSeparableStates) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const DensityMatrix prod = tensor(random_density(2, 1 + t % 2, rng), random_density(2, 2, rng));
    EXPECT_EQ(nielsen_criterion(prod, {2, 2}), NielsenVerdict::kConsistentWithSeparable);
    const DensityMatrix sep = random_separable(1 + t % 16, 1000 + t).assemble();
    EXPECT_EQ(nielsen_criterion(sep, {2, 2}), NielsenVerdict::kConsistentWithSeparable);
  }
  EXPECT_EQ(nielsen_criterion(maximally_mixed(6), {2, 3}), NielsenVerdict::kConsistentWithSeparable);
  EXPECT_THROW(nielsen_criterion(maximally_mixed(4), {2, 3}), DomainError);
}

}  // namespace
}  // namespace qmetric
