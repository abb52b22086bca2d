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
#include <random>

#include <Eigen/Dense>

namespace qmetric {

using Rng = std::mt19937_64;

/// Derives an independent 64-bit seed for sub-stream `stream` of `seed`
/// (splitmix64 finalizer). Used to slice one user seed into per-trial and
/// per-restart generators so that sharded work stays deterministic.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// rows x cols matrix of independent standard complex Gaussians
/// (real and imaginary parts each N(0, 1/2)).
Eigen::MatrixXcd ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with the phases of R's
/// diagonal absorbed into Q).
Eigen::MatrixXcd haar_unitary(Eigen::Index dim, Rng& rng);

/// Uniform point of the probability simplex with `n` entries.
Eigen::VectorXd flat_simplex(Eigen::Index n, Rng& rng);

}  // namespace qmetric
