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

#include <functional>

#include <Eigen/Dense>

namespace qmetric {

struct NelderMeadOptions {
  int max_evaluations = 2000;
  // Stop when the spread of objective values across the simplex drops below this.
  double f_tolerance = 1e-8;
  double initial_step = 0.3;
  // After convergence the simplex is rebuilt around the best vertex with a
  // step shrunk by `restart_shrink`, as long as budget remains and the last
  // rebuild improved the objective.
  int max_rebuilds = 3;
  double restart_shrink = 0.1;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Minimizes `f` with the dimension-adaptive Nelder-Mead simplex method
/// (Gao and Han coefficients).
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0, const NelderMeadOptions& options);

}  // namespace qmetric
