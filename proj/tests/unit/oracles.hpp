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

// Reference computations used as oracles. Each one takes a different
// numerical route from the library code it checks.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace qmetric::testing {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Trace norm as the sum of singular values.
inline double trace_norm(const CMat& a) {
  return Eigen::JacobiSVD<CMat>(a).singularValues().sum();
}

// Square root of a PSD matrix through Denman-Beavers iteration, which never
// diagonalizes. A small shift keeps singular inputs invertible.
inline CMat sqrtm_db(const CMat& a) {
  const auto n = a.rows();
  CMat y = a + 1e-300 * CMat::Identity(n, n);
  CMat z = CMat::Identity(n, n);
  for (int it = 0; it < 100; ++it) {
    const CMat yi = y.inverse();
    const CMat zi = z.inverse();
    y = 0.5 * (y + zi);
    z = 0.5 * (z + yi);
  }
  return y;
}

// Uhlmann fidelity as the trace norm of sqrt(rho) sqrt(sigma), for
// full-rank inputs.
inline double fidelity_svd(const CMat& rho, const CMat& sigma) {
  return trace_norm(sqrtm_db(rho) * sqrtm_db(sigma));
}

// |<phi|psi>|^2 for normalized vectors.
inline double overlap2(const CVec& phi, const CVec& psi) { return std::norm(phi.dot(psi)); }

// Every set partition of {0..n-1} by restricted growth strings.
inline std::vector<std::vector<std::vector<int>>> all_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int m) {
    if (i == n) {
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(m + 1));
      for (int k = 0; k < n; ++k) blocks[static_cast<std::size_t>(a[k])].push_back(k);
      out.push_back(blocks);
      return;
    }
    for (int v = 0; v <= m + 1; ++v) {
      a[static_cast<std::size_t>(i)] = v;
      rec(i + 1, std::max(m, v));
    }
  };
  if (n == 0) return {{}};
  a[0] = 0;
  rec(1, 0);
  return out;
}

// Brute-force d_p for two probability vectors measured in a fixed basis:
// maximum over all coarse-grainings.
inline double dp_commuting(const std::vector<double>& x, const std::vector<double>& y, double p) {
  double best = 0.0;
  for (const auto& blocks : all_partitions(static_cast<int>(x.size()))) {
    double s = 0.0;
    for (const auto& b : blocks) {
      double px = 0.0;
      double py = 0.0;
      for (int i : b) {
        px += x[static_cast<std::size_t>(i)];
        py += y[static_cast<std::size_t>(i)];
      }
      s += std::pow(std::abs(std::pow(px, 1.0 / p) - std::pow(py, 1.0 / p)), p);
    }
    best = std::max(best, s);
  }
  return std::pow(best, 1.0 / p);
}

// D_p for commuting diagonal states: the classical p-root distance.
inline double brother_commuting(const std::vector<double>& x, const std::vector<double>& y,
                                double p) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += std::pow(std::abs(std::pow(x[i], 1.0 / p) - std::pow(y[i], 1.0 / p)), p);
  }
  return std::pow(s, 1.0 / p);
}

// Largest |<Phi|a (x) b>|^2 over a dense grid of qubit product states,
// used to bound the fidelity between a pure two-qubit state and the
// separable set.
inline double max_product_overlap(const CVec& phi, int grid) {
  const double pi = std::acos(-1.0);
  std::vector<Eigen::Vector2cd> qubits;
  for (int i = 0; i <= grid; ++i) {
    const double th = pi * i / grid;
    for (int k = 0; k < 2 * grid; ++k) {
      const double ph = pi * k / grid;
      qubits.emplace_back(std::cos(th / 2), std::polar(std::sin(th / 2), ph));
    }
  }
  double best = 0.0;
  for (const auto& a : qubits) {
    for (const auto& b : qubits) {
      CVec ab(4);
      ab << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
      best = std::max(best, overlap2(phi, ab));
    }
  }
  return best;
}

// Eigenvalues of a Hermitian matrix by the real symmetric embedding
// [[Re, -Im], [Im, Re]], whose spectrum is that of H doubled.
inline std::vector<double> hermitian_eigs_embedded(const CMat& h) {
  const auto n = h.rows();
  Eigen::MatrixXd m(2 * n, 2 * n);
  m << h.real(), -h.imag(), h.imag(), h.real();
  Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
  std::vector<double> out;
  for (Eigen::Index i = 0; i < 2 * n; i += 2) out.push_back(ev(i));
  return out;  // ascending
}

}  // namespace qmetric::testing
