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

#include "qmetric/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace qmetric {

namespace {

struct Run {
  Eigen::VectorXd x;
  double value;
  bool converged;
};

Run simplex_run(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x0,
                double fx0, double step, double f_tol, int& evals, int max_evals) {
  const Eigen::Index n = x0.size();
  const double nd = static_cast<double>(n);
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / nd;
  const double gamma = 0.75 - 1.0 / (2.0 * nd);
  const double delta = 1.0 - 1.0 / nd;

  std::vector<Eigen::VectorXd> pts(static_cast<std::size_t>(n + 1), x0);
  std::vector<double> vals(static_cast<std::size_t>(n + 1), fx0);
  auto eval = [&](const Eigen::VectorXd& x) {
    ++evals;
    return f(x);
  };
  for (Eigen::Index i = 0; i < n && evals < max_evals; ++i) {
    pts[static_cast<std::size_t>(i + 1)](i) += step;
    vals[static_cast<std::size_t>(i + 1)] = eval(pts[static_cast<std::size_t>(i + 1)]);
  }

  std::vector<std::size_t> order(pts.size());
  bool converged = false;
  while (true) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[order.size() - 2];
    if (vals[worst] - vals[best] <= f_tol) {
      converged = true;
      break;
    }
    if (evals >= max_evals) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t k = 0; k + 1 < order.size(); ++k) centroid += pts[order[k]];
    centroid /= nd;

    const Eigen::VectorXd xr = centroid + alpha * (centroid - pts[worst]);
    const double fr = eval(xr);
    if (fr < vals[best]) {
      const Eigen::VectorXd xe = centroid + beta * (xr - centroid);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    const Eigen::VectorXd xc = outside ? Eigen::VectorXd(centroid + gamma * (xr - centroid))
                                       : Eigen::VectorXd(centroid - gamma * (xr - centroid));
    const double fc = eval(xc);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = xc;
      vals[worst] = fc;
      continue;
    }
    // Shrink towards the best vertex.
    for (std::size_t k = 1; k < order.size(); ++k) {
      auto& p = pts[order[k]];
      p = pts[best] + delta * (p - pts[best]);
      vals[order[k]] = eval(p);
      if (evals >= max_evals) break;
    }
  }
  const auto it = std::min_element(vals.begin(), vals.end());
  const auto idx = static_cast<std::size_t>(std::distance(vals.begin(), it));
  return {pts[idx], vals[idx], converged};
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0, const NelderMeadOptions& options) {
  NelderMeadResult result;
  result.evaluations = 1;
  result.x = x0;
  result.value = f(x0);
  if (x0.size() == 0) {
    result.converged = true;
    return result;
  }
  double step = options.initial_step;
  for (int rebuild = 0; rebuild <= options.max_rebuilds; ++rebuild) {
    if (result.evaluations >= options.max_evaluations) break;
    const double before = result.value;
    Run run = simplex_run(f, result.x, result.value, step, options.f_tolerance,
                          result.evaluations, options.max_evaluations);
    if (run.value <= result.value) {
      result.x = std::move(run.x);
      result.value = run.value;
    }
    result.converged = run.converged;
    if (!run.converged || before - result.value <= options.f_tolerance) break;
    step *= options.restart_shrink;
  }
  return result;
}

}  // namespace qmetric
