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

#include "qmetric/convexity_lab.hpp"

#include <cmath>
#include <sstream>

#include "qmetric/error.hpp"
#include "qmetric/metrics_sup.hpp"
#include "qmetric/parallel.hpp"

namespace qmetric {

namespace {

int restarts_for(const LabOptions& options, Eigen::Index dim) {
  return options.dp_restarts > 0 ? options.dp_restarts : default_dp_restarts(dim);
}

double distance(const MetricId& metric, const DensityMatrix& rho, const DensityMatrix& sigma,
                const LabOptions& options) {
  if (metric.family() != MetricFamily::kMeasured) return evaluate_closed(metric, rho, sigma);
  const double p = *metric.p();
  if (rho.is_diagonal() && sigma.is_diagonal()) return dp_diagonal(rho, sigma, p).value;
  DpOptions dp;
  dp.jobs = options.jobs;
  return dp_supremum(rho, sigma, p, restarts_for(options, rho.dim()), options.dp_seed, dp).value;
}

void require_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("lambda must lie in [0, 1]");
}

DensityMatrix sample_state(Eigen::Index dim, bool pure, Rng& rng) {
  std::uniform_int_distribution<Eigen::Index> rank(1, dim);
  return random_density(dim, pure ? 1 : rank(rng), rng);
}

DensityMatrix sample_diagonal(Eigen::Index dim, Rng& rng) {
  Eigen::VectorXd w = flat_simplex(dim, rng);
  if (std::bernoulli_distribution(0.25)(rng)) {
    w(std::uniform_int_distribution<Eigen::Index>(0, dim - 1)(rng)) = 0.0;
    w /= w.sum();
  }
  return diagonal_state(w);
}

// Evaluates trials [0, count) in batches and returns the lowest index whose
// candidate is a witness. `make(t)` builds the candidate for trial t.
template <typename Make>
std::optional<Witness> first_witness(std::int64_t count, int jobs, Make&& make) {
  const std::int64_t batch = std::max(1, jobs) * 8;
  for (std::int64_t start = 0; start < count; start += batch) {
    const std::int64_t n = std::min(batch, count - start);
    std::vector<std::optional<Witness>> slots(static_cast<std::size_t>(n));
    parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t i) {
      slots[i] = make(start + static_cast<std::int64_t>(i));
    });
    for (auto& slot : slots) {
      if (slot) return slot;
    }
  }
  return std::nullopt;
}

}  // namespace

double joint_convexity_gap(const MetricId& metric, const DensityMatrix& rho1,
                           const DensityMatrix& sigma1, const DensityMatrix& rho2,
                           const DensityMatrix& sigma2, double lambda,
                           const LabOptions& options) {
  require_lambda(lambda);
  if (metric.is_fidelity()) throw DomainError("joint_convexity_gap: expects a distance metric");
  if (rho1.dim() != sigma1.dim() || rho1.dim() != rho2.dim() || rho1.dim() != sigma2.dim()) {
    throw DomainError("joint_convexity_gap: dimension mismatch");
  }
  const double k = metric.power();
  auto powered = [&](const DensityMatrix& a, const DensityMatrix& b) {
    return std::pow(distance(metric, a, b, options), k);
  };
  const double mixed = powered(mix(lambda, rho1, rho2), mix(lambda, sigma1, sigma2));
  return mixed - lambda * powered(rho1, sigma1) - (1.0 - lambda) * powered(rho2, sigma2);
}

Witness convexity_candidate(const MetricId& metric, std::int64_t trial, std::uint64_t seed,
                            const LabOptions& options) {
  if (metric.is_fidelity()) throw DomainError("convexity_candidate: expects a distance metric");
  if (trial < 0) throw DomainError("convexity_candidate: trial must be >= 0");
  Witness w;
  w.kind = WitnessKind::kConvexity;
  w.metric = metric;
  w.seed = seed;
  w.trial = trial;
  if (trial < kConvexityGridPoints) {
    w.lambda = 0.05 * static_cast<double>(trial);
    w.states = {diagonal_state(Eigen::Vector2d(0.2, 0.8)), diagonal_state(Eigen::Vector2d(0.4, 0.6)),
                diagonal_state(Eigen::Vector2d(0.8, 0.2)), diagonal_state(Eigen::Vector2d(0.6, 0.4))};
  } else {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
    const Eigen::Index dim = 2 + (trial - kConvexityGridPoints) % 2;
    if (metric.family() == MetricFamily::kMeasured) {
      for (int i = 0; i < 4; ++i) w.states.push_back(sample_diagonal(dim, rng));
    } else {
      const bool pure = std::bernoulli_distribution(0.5)(rng);
      for (int i = 0; i < 4; ++i) w.states.push_back(sample_state(dim, pure, rng));
    }
    w.lambda = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  }
  w.gap = joint_convexity_gap(metric, w.states[0], w.states[1], w.states[2], w.states[3],
                              *w.lambda, options);
  return w;
}

std::optional<Witness> find_convexity_violation(const MetricId& metric, int trials,
                                                std::uint64_t seed,
                                                const LabOptions& options) {
  if (trials < 1) throw DomainError("find_convexity_violation: trials must be >= 1");
  if (metric.is_fidelity()) throw DomainError("find_convexity_violation: expects a distance metric");
  // The parallel workers run the d_p optimizer serially.
  LabOptions inner = options;
  inner.jobs = 1;
  auto make = [&](std::int64_t t) -> std::optional<Witness> {
    Witness w = convexity_candidate(metric, t, seed, inner);
    if (w.gap > kWitnessThreshold) return w;
    return std::nullopt;
  };
  return first_witness(kConvexityGridPoints + trials, options.jobs, make);
}

double contractivity_gap(const MetricId& metric, const DensityMatrix& rho,
                         const DensityMatrix& sigma, const KrausChannel& channel,
                         const LabOptions& options) {
  if (rho.dim() != sigma.dim() || rho.dim() != channel.dim()) {
    throw DomainError("contractivity_gap: dimension mismatch");
  }
  const DensityMatrix out_rho = apply(channel, rho);
  const DensityMatrix out_sigma = apply(channel, sigma);
  if (metric.family() != MetricFamily::kMeasured) {
    return evaluate_closed(metric, out_rho, out_sigma) - evaluate_closed(metric, rho, sigma);
  }
  const double p = *metric.p();
  const int restarts = restarts_for(options, rho.dim());
  DpOptions dp;
  dp.jobs = options.jobs;
  const DpResult out = dp_supremum(out_rho, out_sigma, p, restarts, options.dp_seed, dp);
  dp.warm_starts = pullback_bases(channel, out.family);
  const DpResult in = dp_supremum(rho, sigma, p, restarts, options.dp_seed, dp);
  return out.value - in.value;
}

Witness contractivity_candidate(double p, std::int64_t trial, std::uint64_t seed,
                                SearchDirection direction) {
  if (trial < 0) throw DomainError("contractivity_candidate: trial must be >= 0");
  const MetricId metric = MetricId::brother(p);
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
  const Eigen::Index dim = 2 + trial % 2;
  const Eigen::Index env = 1 + (trial / 2) % 3;
  const bool pure = std::bernoulli_distribution(0.5)(rng);
  Witness w;
  w.kind = direction == SearchDirection::kIncrease ? WitnessKind::kContractivity
                                                    : WitnessKind::kExpansion;
  w.metric = metric;
  w.seed = seed;
  w.trial = trial;
  w.states = {sample_state(dim, pure, rng), sample_state(dim, pure, rng)};
  w.channel = random_channel(dim, env, rng);
  const double gap = contractivity_gap(metric, w.states[0], w.states[1], *w.channel);
  w.gap = direction == SearchDirection::kIncrease ? gap : -gap;
  return w;
}

std::optional<Witness> find_contractivity_violation(double p, int trials, std::uint64_t seed,
                                                    SearchDirection direction,
                                                    const LabOptions& options) {
  if (trials < 1) throw DomainError("find_contractivity_violation: trials must be >= 1");
  auto make = [&](std::int64_t t) -> std::optional<Witness> {
    Witness w = contractivity_candidate(p, t, seed, direction);
    if (w.gap > kWitnessThreshold) return w;
    return std::nullopt;
  };
  return first_witness(trials, options.jobs, make);
}

double recompute_gap(const Witness& witness, const LabOptions& options) {
  switch (witness.kind) {
    case WitnessKind::kConvexity:
      if (witness.states.size() != 4 || !witness.lambda) {
        throw DomainError("convexity witness needs four states and lambda");
      }
      return joint_convexity_gap(witness.metric, witness.states[0], witness.states[1],
                                 witness.states[2], witness.states[3], *witness.lambda, options);
    case WitnessKind::kContractivity:
    case WitnessKind::kExpansion: {
      if (witness.states.size() != 2 || !witness.channel) {
        throw DomainError("contractivity witness needs two states and a channel");
      }
      const double gap = contractivity_gap(witness.metric, witness.states[0], witness.states[1],
                                           *witness.channel, options);
      return witness.kind == WitnessKind::kContractivity ? gap : -gap;
    }
  }
  throw DomainError("unknown witness kind");
}

namespace {

void require_distribution(std::span<const double> d, const char* name) {
  double total = 0.0;
  for (double x : d) {
    if (!(x >= 0.0)) throw DomainError(std::string("eq8_gap: ") + name + " has a negative entry");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError(std::string("eq8_gap: ") + name + " does not sum to 1");
  }
}

double root_power(double a, double b, double p) {
  return std::pow(std::abs(std::pow(a, 1.0 / p) - std::pow(b, 1.0 / p)), p);
}

}  // namespace

double eq8_gap(std::span<const double> p1, std::span<const double> p2,
               std::span<const double> p3, std::span<const double> p4, double lambda,
               double p) {
  require_lambda(lambda);
  if (!(p >= 1.0)) throw DomainError("eq8_gap: p must be >= 1");
  const std::size_t n = p1.size();
  if (n == 0 || p2.size() != n || p3.size() != n || p4.size() != n) {
    throw DomainError("eq8_gap: distributions must share one nonzero length");
  }
  require_distribution(p1, "P1");
  require_distribution(p2, "P2");
  require_distribution(p3, "P3");
  require_distribution(p4, "P4");
  double lhs = 0.0;
  double rhs1 = 0.0;
  double rhs2 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    lhs += root_power(lambda * p1[j] + (1.0 - lambda) * p2[j],
                      lambda * p3[j] + (1.0 - lambda) * p4[j], p);
    rhs1 += root_power(p1[j], p3[j], p);
    rhs2 += root_power(p2[j], p4[j], p);
  }
  return lhs - (lambda * rhs1 + (1.0 - lambda) * rhs2);
}

RealMatrix hessian_f(double a, double b) {
  if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0)) {
    std::ostringstream os;
    os << "hessian_f: (" << a << ", " << b << ") is not inside the open unit square";
    throw DomainError(os.str());
  }
  const double ca = 1.0 - a;
  const double cb = 1.0 - b;
  const double faa = 0.5 * std::pow(a, -1.5) * std::sqrt(b) + 0.5 * std::pow(ca, -1.5) * std::sqrt(cb);
  const double fbb = 0.5 * std::pow(b, -1.5) * std::sqrt(a) + 0.5 * std::pow(cb, -1.5) * std::sqrt(ca);
  const double fab = -0.5 / std::sqrt(a * b) - 0.5 / std::sqrt(ca * cb);
  RealMatrix h(2, 2);
  h << faa, fab, fab, fbb;
  return h;
}

}  // namespace qmetric
