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

#include <set>

#include "qmetric/random.hpp"

namespace qmetric {
namespace {

TEST(DeriveSeed, DistinctStreamsGiveDistinctSeeds) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 1000; ++s) seen.insert(derive_seed(7, s));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(derive_seed(0, 0), derive_seed(1, 0));
  EXPECT_EQ(derive_seed(42, 3), derive_seed(42, 3));
}

TEST(Ginibre, SameSeedSameMatrix) {
  Rng a(5);
  Rng b(5);
  EXPECT_EQ(ginibre(3, 2, a), ginibre(3, 2, b));
}

TEST(Ginibre, EntriesHaveUnitSecondMoment) {
  Rng rng(11);
  const auto g = ginibre(200, 200, rng);
  const double mean_sq = g.cwiseAbs2().mean();
  EXPECT_NEAR(mean_sq, 1.0, 0.02);
  EXPECT_NEAR(g.mean().real(), 0.0, 0.01);
}

TEST(HaarUnitary, IsUnitary) {
  Rng rng(3);
  for (Eigen::Index d = 1; d <= 6; ++d) {
    const auto u = haar_unitary(d, rng);
    EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d)).norm(), 1e-12) << d;
  }
}

TEST(HaarUnitary, FirstEntryModulusMatchesHaarMean) {
  // For Haar measure on U(d), E|U_00|^2 = 1/d.
  Rng rng(17);
  double acc = 0.0;
  constexpr int kSamples = 20000;
  for (int i = 0; i < kSamples; ++i) acc += std::norm(haar_unitary(3, rng)(0, 0));
  EXPECT_NEAR(acc / kSamples, 1.0 / 3.0, 0.01);
}

TEST(FlatSimplex, SumsToOneAndIsNonnegative) {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto w = flat_simplex(4, rng);
    EXPECT_NEAR(w.sum(), 1.0, 1e-14);
    EXPECT_GE(w.minCoeff(), 0.0);
  }
}

TEST(FlatSimplex, MarginalMeanIsUniform) {
  Rng rng(21);
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(3);
  for (int i = 0; i < 30000; ++i) acc += flat_simplex(3, rng);
  acc /= 30000.0;
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(acc(i), 1.0 / 3.0, 0.01);
}

}  // namespace
}  // namespace qmetric
