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

#include "qmetric/metrics_sup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qmetric/error.hpp"
#include "qmetric/nelder_mead.hpp"
#include "qmetric/parallel.hpp"

namespace qmetric {

ProjectionFamily ProjectionFamily::from_basis(const Matrix& basis, Partition partition) {
  const Eigen::Index n = basis.rows();
  if (n < 1 || basis.cols() != n) throw DomainError("family_from_basis: basis must be square");
  if ((basis.adjoint() * basis - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > kProjectionTol) {
    throw DomainError("family_from_basis: basis is not unitary within 1e-9");
  }
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto& block : partition) {
    if (block.empty()) throw DomainError("family_from_basis: empty block");
    for (Eigen::Index i : block) {
      if (i < 0 || i >= n) throw DomainError("family_from_basis: index out of range");
      if (seen[static_cast<std::size_t>(i)]++) throw DomainError("family_from_basis: overlapping blocks");
    }
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0) {
    throw DomainError("family_from_basis: blocks do not cover all indices");
  }

  ProjectionFamily family;
  family.basis_ = basis;
  family.partition_ = std::move(partition);
  Matrix total = Matrix::Zero(n, n);
  for (const auto& block : family.partition_) {
    Matrix proj = Matrix::Zero(n, n);
    for (Eigen::Index i : block) proj += basis.col(i) * basis.col(i).adjoint();
    total += proj;
    family.projections_.push_back(std::move(proj));
  }
  const auto& projs = family.projections_;
  for (std::size_t j = 0; j < projs.size(); ++j) {
    if ((projs[j] * projs[j] - projs[j]).cwiseAbs().maxCoeff() > kProjectionTol ||
        !is_hermitian(projs[j], kProjectionTol)) {
      throw ValidationError("projection", "block projection is not an orthogonal projection");
    }
    for (std::size_t k = j + 1; k < projs.size(); ++k) {
      if ((projs[j] * projs[k]).cwiseAbs().maxCoeff() > kProjectionTol) {
        throw ValidationError("projection", "projections are not mutually orthogonal");
      }
    }
  }
  if ((total - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > kProjectionTol) {
    throw ValidationError("projection", "projections do not sum to the identity");
  }
  return family;
}

ProjectionFamily family_from_basis(const Matrix& basis, const Partition& partition) {
  return ProjectionFamily::from_basis(basis, partition);
}

Partition finest_partition(Eigen::Index dim) {
  Partition part;
  for (Eigen::Index i = 0; i < dim; ++i) part.push_back({i});
  return part;
}

namespace {

void extend_partitions(Eigen::Index next, Eigen::Index n, Partition& current,
                       std::vector<Partition>& out) {
  if (next == n) {
    out.push_back(current);
    return;
  }
  // A fresh singleton first, so that the finest partition is emitted first.
  current.push_back({next});
  extend_partitions(next + 1, n, current, out);
  current.pop_back();
  for (auto& block : current) {
    block.push_back(next);
    extend_partitions(next + 1, n, current, out);
    block.pop_back();
  }
}

}  // namespace

std::vector<Partition> set_partitions(Eigen::Index n) {
  std::vector<Partition> out;
  if (n <= 0) return out;
  Partition current;
  extend_partitions(0, n, current, out);
  return out;
}

double root_difference_power(double a, double b, double p) {
  a = std::clamp(a, 0.0, 1.0);
  b = std::clamp(b, 0.0, 1.0);
  if (p == 1.0) return std::abs(a - b);
  return std::pow(std::abs(std::pow(a, 1.0 / p) - std::pow(b, 1.0 / p)), p);
}

double dp_objective(const DensityMatrix& rho, const DensityMatrix& sigma,
                    const ProjectionFamily& family, double p) {
  if (rho.dim() != sigma.dim() || family.dim() != rho.dim()) {
    throw DomainError("dp_objective: dimension mismatch");
  }
  if (!(p >= 1.0)) throw DomainError("dp_objective: p must be >= 1");
  double acc = 0.0;
  for (const Matrix& proj : family.projections()) {
    const double a = (rho.matrix() * proj).trace().real();
    const double b = (sigma.matrix() * proj).trace().real();
    acc += root_difference_power(a, b, p);
  }
  return std::pow(acc, 1.0 / p);
}

Matrix unitary_from_params(const Eigen::VectorXd& theta) {
  const auto dim = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(theta.size()))));
  if (dim < 1 || dim * dim != theta.size()) {
    throw DomainError("unitary_from_params: parameter count must be a positive perfect square");
  }
  Matrix h = Matrix::Zero(dim, dim);
  Eigen::Index k = dim;
  for (Eigen::Index i = 0; i < dim; ++i) {
    h(i, i) = theta(i);
    for (Eigen::Index j = i + 1; j < dim; ++j, k += 2) {
      h(i, j) = {theta(k), theta(k + 1)};
      h(j, i) = std::conj(h(i, j));
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const Eigen::VectorXcd phases =
      solver.eigenvalues().unaryExpr([](double x) { return std::polar(1.0, x); });
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

namespace {

// sum_blocks |a^(1/p) - b^(1/p)|^p with block probabilities read off `basis`.
double partition_sum(const Matrix& rho, const Matrix& sigma, const Matrix& basis,
                     const Partition& partition, double p) {
  const Eigen::VectorXd pr = (basis.conjugate().cwiseProduct(rho * basis)).colwise().sum().real();
  const Eigen::VectorXd ps = (basis.conjugate().cwiseProduct(sigma * basis)).colwise().sum().real();
  double acc = 0.0;
  for (const auto& block : partition) {
    double a = 0.0;
    double b = 0.0;
    for (Eigen::Index i : block) {
      a += pr(i);
      b += ps(i);
    }
    acc += root_difference_power(a, b, p);
  }
  return acc;
}

struct Ascent {
  double sum = -1.0;
  Matrix basis;
  bool converged = false;
};

Ascent ascend(const Matrix& rho, const Matrix& sigma, double p, const Matrix& start,
              const Partition& partition, const DpOptions& options) {
  const Eigen::Index dim = rho.rows();
  NelderMeadOptions nm;
  nm.max_evaluations = options.evaluations_per_param * static_cast<int>(dim * dim);
  nm.f_tolerance = options.tolerance;
  auto objective = [&](const Eigen::VectorXd& theta) {
    return -partition_sum(rho, sigma, start * unitary_from_params(theta), partition, p);
  };
  const NelderMeadResult res = nelder_mead(objective, Eigen::VectorXd::Zero(dim * dim), nm);
  return {-res.value, start * unitary_from_params(res.x), res.converged};
}

// Basis with orthonormal columns re-orthonormalized against accumulated drift.
Matrix reorthonormalize(const Matrix& u) {
  Eigen::HouseholderQR<Matrix> qr(u);
  Matrix q = qr.householderQ() * Matrix::Identity(u.rows(), u.cols());
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < u.cols(); ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

// Partitions searched beyond the finest one for dim > 4: merges of adjacent
// columns after sorting by <u|rho - sigma|u>, plus the sign split.
std::vector<Partition> heuristic_partitions(const Matrix& delta, Matrix& basis) {
  const Eigen::Index n = basis.cols();
  std::vector<std::pair<double, Eigen::Index>> keyed;
  for (Eigen::Index i = 0; i < n; ++i) {
    keyed.emplace_back((basis.col(i).adjoint() * delta * basis.col(i))(0).real(), i);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  Matrix sorted(basis.rows(), n);
  for (Eigen::Index i = 0; i < n; ++i) sorted.col(i) = basis.col(keyed[static_cast<std::size_t>(i)].second);
  basis = sorted;

  std::vector<Partition> out;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    Partition part;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i + 1) continue;
      if (j == i) part.push_back({i, i + 1});
      else part.push_back({j});
    }
    out.push_back(std::move(part));
  }
  std::vector<Eigen::Index> positive;
  std::vector<Eigen::Index> rest;
  for (Eigen::Index i = 0; i < n; ++i) {
    (keyed[static_cast<std::size_t>(i)].first > 0.0 ? positive : rest).push_back(i);
  }
  if (!positive.empty() && !rest.empty()) out.push_back({positive, rest});
  return out;
}

}  // namespace

int default_dp_restarts(Eigen::Index dim) { return dim <= 2 ? 16 : 48; }

DpResult dp_supremum(const DensityMatrix& rho, const DensityMatrix& sigma, double p,
                     int restarts, std::uint64_t seed, const DpOptions& options) {
  if (rho.dim() != sigma.dim()) throw DomainError("dp_supremum: dimension mismatch");
  if (!(p >= 1.0)) throw DomainError("dp_supremum: p must be >= 1");
  if (restarts < 1) throw DomainError("dp_supremum: restarts must be >= 1");
  const Eigen::Index dim = rho.dim();
  const Matrix identity = Matrix::Identity(dim, dim);

  DpResult result;
  result.restarts_used = restarts;
  if (rho.matrix() == sigma.matrix() || dim == 1) {
    result.family = ProjectionFamily::from_basis(identity, finest_partition(dim));
    result.value = 0.0;
    result.converged = true;
    return result;
  }

  const Matrix& r = rho.matrix();
  const Matrix& s = sigma.matrix();
  std::vector<Matrix> starts;
  if (options.spectral_warm_starts) {
    starts.push_back(eigh(hermitian_part(r - s)).basis);
    if (p != 1.0) {
      starts.push_back(eigh(hermitian_part(mat_power(r, 1.0 / p) - mat_power(s, 1.0 / p))).basis);
    }
    starts.push_back(eigh(r).basis);
    starts.push_back(eigh(s).basis);
  }
  for (const Matrix& w : options.warm_starts) {
    if (w.rows() != dim || w.cols() != dim) throw DomainError("dp_supremum: warm start has wrong shape");
    starts.push_back(reorthonormalize(w));
  }
  for (int k = 0; k < restarts; ++k) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
    starts.push_back(haar_unitary(dim, rng));
  }

  const Partition finest = finest_partition(dim);
  std::vector<Ascent> ascents(starts.size());
  parallel_for(starts.size(), options.jobs, [&](std::size_t i) {
    ascents[i] = ascend(r, s, p, starts[i], finest, options);
  });
  std::size_t best_idx = 0;
  for (std::size_t i = 1; i < ascents.size(); ++i) {
    if (ascents[i].sum > ascents[best_idx].sum) best_idx = i;
  }
  Ascent best = ascents[best_idx];
  Partition best_partition = finest;

  // Coarser partitions, each polished from the best basis found so far.
  Matrix coarse_start = best.basis;
  std::vector<Partition> coarse;
  if (dim <= 4) {
    coarse = set_partitions(dim);
    coarse.erase(coarse.begin());  // finest, already done
  } else {
    coarse = heuristic_partitions(hermitian_part(r - s), coarse_start);
  }
  std::vector<Ascent> coarse_runs(coarse.size());
  parallel_for(coarse.size(), options.jobs, [&](std::size_t i) {
    if (coarse[i].size() == 1) {
      coarse_runs[i] = {partition_sum(r, s, coarse_start, coarse[i], p), coarse_start, true};
    } else {
      coarse_runs[i] = ascend(r, s, p, coarse_start, coarse[i], options);
    }
  });
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    if (coarse_runs[i].sum > best.sum) {
      best = coarse_runs[i];
      best_partition = coarse[i];
    }
    // The finest refinement of the same basis can only do better.
    const double refined = partition_sum(r, s, coarse_runs[i].basis, finest, p);
    if (refined > best.sum) {
      best = {refined, coarse_runs[i].basis, coarse_runs[i].converged};
      best_partition = finest;
    }
  }

  result.family = ProjectionFamily::from_basis(reorthonormalize(best.basis), best_partition);
  result.value = dp_objective(rho, sigma, result.family, p);
  result.converged = best.converged;
  return result;
}

DpResult dp_diagonal(const DensityMatrix& rho, const DensityMatrix& sigma, double p) {
  if (rho.dim() != sigma.dim()) throw DomainError("dp_diagonal: dimension mismatch");
  if (!rho.is_diagonal() || !sigma.is_diagonal()) {
    throw DomainError("dp_diagonal: both states must be diagonal");
  }
  const Eigen::Index dim = rho.dim();
  const Matrix identity = Matrix::Identity(dim, dim);
  std::vector<Partition> candidates =
      dim <= 4 ? set_partitions(dim) : std::vector<Partition>{finest_partition(dim)};
  DpResult result;
  result.value = -1.0;
  for (auto& part : candidates) {
    ProjectionFamily fam = ProjectionFamily::from_basis(identity, std::move(part));
    const double v = dp_objective(rho, sigma, fam, p);
    if (v > result.value) {
      result.value = v;
      result.family = std::move(fam);
    }
  }
  result.converged = true;
  return result;
}

std::vector<Matrix> pullback_bases(const KrausChannel& channel, const ProjectionFamily& family) {
  if (family.dim() != channel.dim()) throw DomainError("pullback_bases: dimension mismatch");
  std::vector<Matrix> out;
  // Distinct weights keep the blocks apart, so a unitary channel maps the
  // family back exactly.
  Matrix joint = Matrix::Zero(family.dim(), family.dim());
  double weight = 1.0;
  for (const Matrix& proj : family.projections()) {
    const Matrix back = adjoint_apply(channel, proj);
    joint += weight * back;
    weight += 1.0;
    out.push_back(eigh(back).basis);
  }
  out.insert(out.begin(), eigh(hermitian_part(joint)).basis);
  return out;
}

}  // namespace qmetric
