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

#include "qmetric/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "qmetric/error.hpp"
#include "qmetric/nelder_mead.hpp"
#include "qmetric/parallel.hpp"
#include "qmetric/random.hpp"

namespace qmetric {

namespace {

constexpr BipartiteShape kTwoQubits{2, 2};

ComplexVector qubit(double theta, double phi) {
  ComplexVector v(2);
  v(0) = std::cos(0.5 * theta);
  v(1) = std::polar(std::sin(0.5 * theta), phi);
  return v;
}

// Inverse of `qubit` up to global phase.
std::pair<double, double> qubit_angles(const ComplexVector& v) {
  const double theta = 2.0 * std::atan2(std::abs(v(1)), std::abs(v(0)));
  const double phi = std::abs(v(1)) > 0.0 && std::abs(v(0)) > 0.0
                         ? std::arg(v(1)) - std::arg(v(0))
                         : 0.0;
  return {theta, phi};
}

Matrix sigma_y_sigma_y() {
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy;
}

// Takagi factorization of a complex symmetric matrix: columns z_k with
// A conj(z_k) = s_k z_k, s_k >= 0 descending, z orthonormal.
std::pair<Matrix, Eigen::VectorXd> takagi(const Matrix& a) {
  const Eigen::Index n = a.rows();
  RealMatrix embed(2 * n, 2 * n);
  embed << a.real(), a.imag(), a.imag(), -a.real();
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(embed);
  Matrix z(n, n);
  Eigen::VectorXd s(n);
  Eigen::Index found = 0;
  for (Eigen::Index i = 2 * n - 1; i >= 0 && found < n; --i) {
    const double value = solver.eigenvalues()(i);
    if (value < -1e-12) break;
    ComplexVector v(n);
    for (Eigen::Index k = 0; k < n; ++k) v(k) = {solver.eigenvectors()(k, i), solver.eigenvectors()(n + k, i)};
    for (Eigen::Index j = 0; j < found; ++j) v -= z.col(j).dot(v) * z.col(j);
    const double norm = v.norm();
    if (norm < 1e-6) continue;
    z.col(found) = v / norm;
    s(found) = std::max(value, 0.0);
    ++found;
  }
  if (found < n) throw Error("takagi: factorization did not produce a full basis");
  return {z, s};
}

// Phases with sum_j l_j e^{i theta_j} = 0 for l descending and
// l_0 <= l_1 + l_2 + l_3.
std::array<double, 4> closing_phases(const std::array<double, 4>& l) {
  const double r = std::max(l[0] - l[1], l[2] - l[3]);
  const double ca = l[0] * l[1] > 0.0 ? (r * r - l[0] * l[0] - l[1] * l[1]) / (2.0 * l[0] * l[1]) : -1.0;
  const double a = std::acos(std::clamp(ca, -1.0, 1.0));
  const std::complex<double> target = -(l[0] + std::polar(l[1], a));
  const double big_r = std::abs(target);
  const double base = big_r > 0.0 ? std::arg(target) : 0.0;
  const double cc = big_r * l[2] > 0.0
                        ? (big_r * big_r + l[2] * l[2] - l[3] * l[3]) / (2.0 * big_r * l[2])
                        : 1.0;
  const double c = base + std::acos(std::clamp(cc, -1.0, 1.0));
  const std::complex<double> rem = target - std::polar(l[2], c);
  const double d = std::abs(rem) > 0.0 ? std::arg(rem) : 0.0;
  return {0.0, a, c, d};
}

// Splits a (numerically) product two-qubit vector into its factors.
std::pair<ComplexVector, ComplexVector> split_product(const ComplexVector& z) {
  Matrix m(2, 2);
  m << z(0), z(1), z(2), z(3);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  ComplexVector a = svd.matrixU().col(0);
  ComplexVector b = svd.matrixV().col(0).conjugate();
  return {a.normalized(), b.normalized()};
}

bool supported_metric(const MetricId& metric) {
  return metric.family() == MetricFamily::kTrace || metric.family() == MetricFamily::kBures ||
         metric.family() == MetricFamily::kBrother;
}

}  // namespace

void SeparableDecomposition::validate() const {
  if (weights.empty()) throw ValidationError("decomposition", "no terms");
  if (weights.size() != factors_a.size() || weights.size() != factors_b.size()) {
    throw ValidationError("decomposition", "weights and factor lists differ in length");
  }
  if (weights.size() > static_cast<std::size_t>(kMaxSeparableTerms)) {
    throw ValidationError("decomposition", "more than 16 terms");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ValidationError("decomposition", "negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10) throw ValidationError("decomposition", "weights do not sum to 1");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (factors_a[i].size() != 2 || factors_b[i].size() != 2 ||
        std::abs(factors_a[i].norm() - 1.0) > 1e-10 || std::abs(factors_b[i].norm() - 1.0) > 1e-10) {
      throw ValidationError("decomposition", "factors must be normalized qubit vectors");
    }
  }
}

DensityMatrix SeparableDecomposition::assemble() const {
  validate();
  Matrix acc = Matrix::Zero(4, 4);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    ComplexVector v(4);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) v(2 * a + b) = factors_a[i](a) * factors_b[i](b);
    acc += weights[i] * (v * v.adjoint());
  }
  return new_density(hermitian_part(acc));
}

bool ppt_check(const DensityMatrix& rho, BipartiteShape shape) {
  if (shape.dim_a != 2 || shape.dim_b != 2 || rho.dim() != 4) {
    throw DomainError("ppt_check: only the 2 (x) 2 shape is supported");
  }
  return is_psd(hermitian_part(partial_transpose_b(rho.matrix(), shape)), kPsdTol);
}

SeparableDecomposition random_separable(int terms, std::uint64_t seed) {
  if (terms < 1 || terms > kMaxSeparableTerms) throw DomainError("random_separable: terms must be in [1, 16]");
  Rng rng(seed);
  const Eigen::VectorXd w = flat_simplex(terms, rng);
  SeparableDecomposition out;
  for (int i = 0; i < terms; ++i) {
    out.weights.push_back(w(i));
    out.factors_a.push_back(ginibre(2, 1, rng).col(0).normalized());
    out.factors_b.push_back(ginibre(2, 1, rng).col(0).normalized());
  }
  return out;
}

std::optional<SeparableDecomposition> product_decomposition(const DensityMatrix& rho) {
  if (!ppt_check(rho, kTwoQubits)) return std::nullopt;
  const EigenSystem sys = eigh(rho.matrix());
  std::vector<Eigen::Index> support;
  for (std::size_t i = 0; i < sys.spectrum.size(); ++i) {
    if (sys.spectrum[i] > 1e-13) support.push_back(static_cast<Eigen::Index>(i));
  }
  const auto n = static_cast<Eigen::Index>(support.size());
  Matrix v(4, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index i = support[static_cast<std::size_t>(k)];
    v.col(k) = std::sqrt(sys.spectrum[static_cast<std::size_t>(i)]) * sys.basis.col(i);
  }
  const Matrix tau = v.transpose() * sigma_y_sigma_y() * v;
  const auto [z, s] = takagi(0.5 * (tau + tau.transpose()));

  Matrix x = Matrix::Zero(4, 4);
  x.leftCols(n) = v * z.conjugate();
  std::array<double, 4> lam{0.0, 0.0, 0.0, 0.0};
  for (Eigen::Index k = 0; k < n; ++k) lam[static_cast<std::size_t>(k)] = s(k);
  // A positive concurrence max(0, l0 - l1 - l2 - l3) means entanglement.
  if (lam[0] - lam[1] - lam[2] - lam[3] > 1e-8) return std::nullopt;

  const std::array<double, 4> theta = closing_phases(lam);
  for (int j = 0; j < 4; ++j) x.col(j) *= std::polar(1.0, 0.5 * theta[static_cast<std::size_t>(j)]);
  static constexpr int kSigns[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};

  SeparableDecomposition out;
  for (const auto& row : kSigns) {
    ComplexVector zv = ComplexVector::Zero(4);
    for (int j = 0; j < 4; ++j) zv += 0.5 * static_cast<double>(row[j]) * x.col(j);
    const double weight = zv.squaredNorm();
    if (weight < 1e-15) continue;
    auto [a, b] = split_product(zv / std::sqrt(weight));
    out.weights.push_back(weight);
    out.factors_a.push_back(std::move(a));
    out.factors_b.push_back(std::move(b));
  }
  double total = 0.0;
  for (double w : out.weights) total += w;
  for (double& w : out.weights) w /= total;
  return out;
}

namespace {

constexpr int kParamsPerTerm = 5;

SeparableDecomposition decode(const Eigen::VectorXd& x, int terms) {
  SeparableDecomposition d;
  double max_logit = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < terms; ++i) max_logit = std::max(max_logit, x(kParamsPerTerm * i));
  double total = 0.0;
  for (int i = 0; i < terms; ++i) {
    const Eigen::Index o = kParamsPerTerm * i;
    const double w = std::exp(x(o) - max_logit);
    total += w;
    d.weights.push_back(w);
    d.factors_a.push_back(qubit(x(o + 1), x(o + 2)));
    d.factors_b.push_back(qubit(x(o + 3), x(o + 4)));
  }
  for (double& w : d.weights) w /= total;
  return d;
}

Eigen::VectorXd encode(const SeparableDecomposition& d, int terms) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(kParamsPerTerm * terms);
  for (int i = 0; i < terms; ++i) {
    const Eigen::Index o = kParamsPerTerm * i;
    if (static_cast<std::size_t>(i) < d.size()) {
      x(o) = std::log(std::max(d.weights[static_cast<std::size_t>(i)], 1e-12));
      std::tie(x(o + 1), x(o + 2)) = qubit_angles(d.factors_a[static_cast<std::size_t>(i)]);
      std::tie(x(o + 3), x(o + 4)) = qubit_angles(d.factors_b[static_cast<std::size_t>(i)]);
    } else {
      x(o) = std::log(1e-12);
    }
  }
  return x;
}

SeparableDecomposition random_decomposition(int terms, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> logit(0.0, 1.0);
  Eigen::VectorXd x(kParamsPerTerm * terms);
  for (int i = 0; i < terms; ++i) {
    x(kParamsPerTerm * i) = logit(rng);
    for (int k = 1; k < kParamsPerTerm; ++k) {
      x(kParamsPerTerm * i + k) = angle(rng);
    }
  }
  return decode(x, terms);
}

// Smallest t with (1 - t) rho + t I/4 PPT; the result always is at t = 1.
DensityMatrix depolarize_to_ppt(const DensityMatrix& rho) {
  const DensityMatrix noise = maximally_mixed(4);
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 50; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (ppt_check(mix(1.0 - mid, rho, noise), kTwoQubits)) hi = mid;
    else lo = mid;
  }
  return mix(1.0 - hi, rho, noise);
}

}  // namespace

EntanglementResult geometric_entanglement(const DensityMatrix& rho, const MetricId& metric,
                                          int restarts, std::uint64_t seed,
                                          const EntanglementOptions& options) {
  if (rho.dim() != 4) throw DomainError("geometric_entanglement: expects a two-qubit state");
  if (!supported_metric(metric)) {
    throw DomainError("geometric_entanglement: metric must be trace, bures or Dp, not " + metric.name());
  }
  if (restarts < 1) throw DomainError("geometric_entanglement: restarts must be >= 1");
  const int terms = options.terms;
  if (terms < 1 || terms > kMaxSeparableTerms) throw DomainError("geometric_entanglement: terms must be in [1, 16]");

  // Structured start: an exact decomposition of rho itself, or of the
  // nearest PPT state along the depolarizing line.
  std::vector<SeparableDecomposition> starts;
  const std::optional<SeparableDecomposition> own = product_decomposition(rho);
  if (own && own->size() <= static_cast<std::size_t>(terms)) starts.push_back(*own);
  if (!own) {
    if (auto d = product_decomposition(depolarize_to_ppt(rho)); d && d->size() <= static_cast<std::size_t>(terms)) {
      starts.push_back(*d);
    }
  }
  for (int r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    starts.push_back(random_decomposition(terms, rng));
  }

  NelderMeadOptions nm;
  nm.max_evaluations = options.evaluations_per_restart;
  nm.f_tolerance = 1e-10;
  nm.initial_step = 0.5;
  auto objective = [&](const Eigen::VectorXd& x) {
    return evaluate_closed(metric, rho, decode(x, terms).assemble());
  };

  std::vector<NelderMeadResult> runs(starts.size());
  parallel_for(starts.size(), options.jobs, [&](std::size_t i) {
    runs[i] = nelder_mead(objective, encode(starts[i], terms), nm);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].value < runs[best].value) best = i;
  }

  EntanglementResult result;
  result.metric = metric;
  result.closest = decode(runs[best].x, terms);
  result.value = evaluate_closed(metric, rho, result.closest.assemble());
  result.converged = runs[best].converged;
  return result;
}

}  // namespace qmetric
