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

#include "qmetric/campaigns.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>

#include "qmetric/entanglement.hpp"
#include "qmetric/error.hpp"
#include "qmetric/majorization.hpp"
#include "qmetric/parallel.hpp"
#include "qmetric/random.hpp"

namespace qmetric {

int CampaignReport::violations() const {
  return static_cast<int>(
      std::count_if(trials.begin(), trials.end(), [](const TrialGap& g) { return g.violated; }));
}

double CampaignReport::worst_gap() const {
  double worst = -std::numeric_limits<double>::infinity();
  for (const TrialGap& g : trials) worst = std::max(worst, g.gap);
  return trials.empty() ? 0.0 : worst;
}

namespace {

struct TrialOutcome {
  std::vector<TrialGap> gaps;
  std::optional<Witness> witness;
};

void require_trials(const CampaignOptions& options) {
  if (options.trials < 1) throw DomainError("campaign: trials must be >= 1");
  if (options.dims.empty()) throw DomainError("campaign: dims must not be empty");
  for (Eigen::Index d : options.dims) {
    if (d < 1 || d > kMaxDim) throw DomainError("campaign: dims must lie in [1, 16]");
  }
}

Eigen::Index dim_for(const CampaignOptions& options, std::int64_t trial) {
  return options.dims[static_cast<std::size_t>(trial) % options.dims.size()];
}

DensityMatrix any_rank_state(Eigen::Index dim, Rng& rng) {
  return random_density(dim, std::uniform_int_distribution<Eigen::Index>(1, dim)(rng), rng);
}

// Runs trials [0, count) across `jobs` workers and concatenates their
// records in trial order; the witness of the lowest violating trial wins.
CampaignReport run(std::string name, double tolerance, std::int64_t count, int jobs,
                   const std::function<TrialOutcome(std::int64_t)>& trial) {
  std::vector<TrialOutcome> slots(static_cast<std::size_t>(count));
  parallel_for(slots.size(), jobs, [&](std::size_t i) {
    slots[i] = trial(static_cast<std::int64_t>(i));
  });
  CampaignReport report;
  report.name = std::move(name);
  report.tolerance = tolerance;
  for (TrialOutcome& slot : slots) {
    const bool violated = std::any_of(slot.gaps.begin(), slot.gaps.end(),
                                      [](const TrialGap& g) { return g.violated; });
    if (violated && slot.witness && !report.witness) report.witness = std::move(slot.witness);
    for (TrialGap& g : slot.gaps) report.trials.push_back(std::move(g));
  }
  return report;
}

TrialGap record(std::int64_t trial, std::string check, double gap, double tolerance) {
  return {trial, std::move(check), gap, gap > tolerance};
}

}  // namespace

CampaignReport verify_contractivity(double p, const CampaignOptions& options) {
  require_trials(options);
  const MetricId metric = MetricId::measured(p);
  constexpr double kSlack = 2e-4;
  return run("contractivity", kSlack, options.trials, options.jobs, [&](std::int64_t t) {
    const std::uint64_t trial_seed = derive_seed(options.seed, static_cast<std::uint64_t>(t));
    Rng rng(trial_seed);
    const Eigen::Index dim = dim_for(options, t);
    const Eigen::Index env = 1 + (t / static_cast<std::int64_t>(options.dims.size())) % 3;
    Witness w;
    w.kind = WitnessKind::kContractivity;
    w.metric = metric;
    w.seed = options.seed;
    w.trial = t;
    w.states = {any_rank_state(dim, rng), any_rank_state(dim, rng)};
    w.channel = random_channel(dim, env, rng);
    LabOptions lab;
    lab.dp_restarts = options.dp_restarts;
    lab.dp_seed = derive_seed(trial_seed, 1);
    w.gap = contractivity_gap(metric, w.states[0], w.states[1], *w.channel, lab);
    return TrialOutcome{{record(t, "contractivity", w.gap, kSlack)}, w};
  });
}

CampaignReport verify_joint_convexity(const MetricId& metric, const CampaignOptions& options) {
  require_trials(options);
  return run("convexity", kWitnessThreshold, kConvexityGridPoints + options.trials, options.jobs,
             [&](std::int64_t t) {
               LabOptions lab;
               lab.dp_restarts = options.dp_restarts;
               lab.dp_seed = options.seed;
               Witness w = convexity_candidate(metric, t, options.seed, lab);
               return TrialOutcome{{record(t, "convexity", w.gap, kWitnessThreshold)}, w};
             });
}

CampaignReport verify_metric_axioms(double p, const CampaignOptions& options) {
  require_trials(options);
  if (!(p >= 1.0)) throw DomainError("verify_metric_axioms: p must be >= 1");
  return run("axioms", 1e-9, options.trials, options.jobs, [&](std::int64_t t) {
    Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(t)));
    const Eigen::Index dim = dim_for(options, t);
    const DensityMatrix rho = any_rank_state(dim, rng);
    const DensityMatrix sigma = any_rank_state(dim, rng);
    const DensityMatrix tau = any_rank_state(dim, rng);
    const Matrix u = haar_unitary(dim, rng);
    const double d_rs = brother_metric(rho, sigma, p);
    const double d_st = brother_metric(sigma, tau, p);
    const double d_rt = brother_metric(rho, tau, p);
    TrialOutcome out;
    out.gaps.push_back(record(t, "symmetry", std::abs(d_rs - brother_metric(sigma, rho, p)), 1e-10));
    out.gaps.push_back(record(t, "identity", brother_metric(rho, rho, p), 1e-8));
    // Distinct states must be at positive distance.
    const bool distinct = trace_metric(rho, sigma) >= 1e-8;
    out.gaps.push_back({t, "separation", distinct ? -d_rs : 0.0, distinct && !(d_rs > 0.0)});
    out.gaps.push_back(record(t, "triangle", d_rt - d_rs - d_st, 1e-9));
    const double d_u = brother_metric(conjugate(rho, u), conjugate(sigma, u), p);
    out.gaps.push_back(record(t, "unitary", std::abs(d_u - d_rs), 1e-9));
    return out;
  });
}

CampaignReport verify_majorization(const std::vector<std::pair<double, double>>& pairs,
                                   const CampaignOptions& options) {
  require_trials(options);
  if (pairs.empty()) throw DomainError("verify_majorization: no (p, q) pairs");
  for (const auto& [p, q] : pairs) {
    if (!(p >= 1.0 && q >= p)) throw DomainError("verify_majorization: need 1 <= p <= q");
  }
  return run("majorization", kPrefixTol, options.trials, options.jobs, [&](std::int64_t t) {
    Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(t)));
    const Eigen::Index dim = dim_for(options, t);
    const auto& [p, q] = pairs[static_cast<std::size_t>(t) % pairs.size()];
    const DensityMatrix rho = any_rank_state(dim, rng);
    const DensityMatrix sigma = any_rank_state(dim, rng);
    const Theorem4Report rep = theorem4_check(rho, sigma, p, q);
    TrialOutcome out;
    out.gaps.push_back({t, "prefix", -rep.majorization.worst_gap(), !rep.majorization.holds});
    out.gaps.push_back({t, "corollary", rep.dq_power_q - rep.dp_power_p, !rep.corollary_holds});
    return out;
  });
}

CampaignReport verify_eq8(double p, const CampaignOptions& options) {
  require_trials(options);
  constexpr double kTol = 1e-12;
  return run("eq8", kTol, options.trials, options.jobs, [&](std::int64_t t) {
    std::array<std::array<double, 2>, 4> d;
    double lambda = 0.5;
    if (t == 0) {
      d = {{{0.2, 0.8}, {0.8, 0.2}, {0.4, 0.6}, {0.6, 0.4}}};
    } else {
      Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(t)));
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      for (auto& v : d) {
        v[0] = unit(rng);
        v[1] = 1.0 - v[0];
      }
      lambda = unit(rng);
    }
    const double gap = eq8_gap(d[0], d[1], d[2], d[3], lambda, p);
    return TrialOutcome{{record(t, "eq8", gap, kTol)}, std::nullopt};
  });
}

CampaignReport verify_hessian(int grid_points) {
  if (grid_points < 1) throw DomainError("verify_hessian: grid_points must be >= 1");
  constexpr double kStep = 1e-5;
  constexpr double kRelTol = 1e-4;
  auto f = [](double a, double b) {
    const double x = std::sqrt(a) - std::sqrt(b);
    const double y = std::sqrt(1.0 - a) - std::sqrt(1.0 - b);
    return x * x + y * y;
  };
  const std::int64_t n = grid_points;
  return run("hessian", kRelTol, n * n, 1, [&](std::int64_t t) {
    const double a = static_cast<double>(t / n + 1) / static_cast<double>(n + 1);
    const double b = static_cast<double>(t % n + 1) / static_cast<double>(n + 1);
    const double h = kStep;
    const double f0 = f(a, b);
    RealMatrix fd(2, 2);
    fd(0, 0) = (f(a + h, b) - 2.0 * f0 + f(a - h, b)) / (h * h);
    fd(1, 1) = (f(a, b + h) - 2.0 * f0 + f(a, b - h)) / (h * h);
    fd(0, 1) = fd(1, 0) =
        (f(a + h, b + h) - f(a + h, b - h) - f(a - h, b + h) + f(a - h, b - h)) / (4.0 * h * h);
    const RealMatrix hf = hessian_f(a, b);
    double rel = 0.0;
    for (int i = 0; i < 2; ++i) {
      for (int k = 0; k < 2; ++k) rel = std::max(rel, std::abs(hf(i, k) - fd(i, k)) / std::abs(hf(i, k)));
    }
    const double min_eig = Eigen::SelfAdjointEigenSolver<RealMatrix>(hf).eigenvalues().minCoeff();
    TrialOutcome out;
    out.gaps.push_back(record(t, "finite_difference", rel, kRelTol));
    out.gaps.push_back({t, "psd", -min_eig, !is_psd(hf, 1e-9)});
    return out;
  });
}

CampaignReport verify_a_fidelity(const CampaignOptions& options) {
  require_trials(options);
  return run("a_fidelity", 1e-9, options.trials, options.jobs, [&](std::int64_t t) {
    Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(t)));
    const Eigen::Index dim = dim_for(options, t);
    const Eigen::Index env = 1 + (t / static_cast<std::int64_t>(options.dims.size())) % 3;
    const DensityMatrix rho = any_rank_state(dim, rng);
    const DensityMatrix sigma = any_rank_state(dim, rng);
    const KrausChannel channel = random_channel(dim, env, rng);
    const double before = a_fidelity(rho, sigma);
    const double after = a_fidelity(apply(channel, rho), apply(channel, sigma));
    ComplexVector phi = ginibre(dim, 1, rng).col(0);
    ComplexVector psi = ginibre(dim, 1, rng).col(0);
    phi.normalize();
    psi.normalize();
    const double overlap = std::norm(phi.dot(psi));
    const double pure = a_fidelity(pure_state(phi), pure_state(psi));
    TrialOutcome out;
    out.gaps.push_back(record(t, "expansive", before - after, 1e-9));
    out.gaps.push_back(record(t, "pure_overlap", std::abs(pure - overlap), 1e-10));
    return out;
  });
}

CampaignReport verify_nielsen(const CampaignOptions& options) {
  require_trials(options);
  const BipartiteShape shape{2, 2};
  const std::int64_t n = options.trials;
  return run("nielsen", 0.0, n + 1, options.jobs, [&](std::int64_t t) {
    TrialOutcome out;
    if (t == n) {
      const bool detected =
          nielsen_criterion(bell_state(), shape) == NielsenVerdict::kEntangledDetected;
      out.gaps.push_back({t, "bell_detected", detected ? 0.0 : 1.0, !detected});
      return out;
    }
    const int terms = 1 + static_cast<int>(t % kMaxSeparableTerms);
    const DensityMatrix rho =
        random_separable(terms, derive_seed(options.seed, static_cast<std::uint64_t>(t))).assemble();
    const bool flagged = nielsen_criterion(rho, shape) == NielsenVerdict::kEntangledDetected;
    out.gaps.push_back({t, "false_positive", flagged ? 1.0 : 0.0, flagged});
    return out;
  });
}

}  // namespace qmetric
