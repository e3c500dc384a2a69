// Copyright 2026 The walshci Authors
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
#include <vector>

namespace walshci {

using Objective = std::function<double(const std::vector<double> &)>;

/// Called for the initial point (iteration 0) and once per iteration after,
/// with the best value seen so far and its point.
using IterationCallback =
    std::function<void(int, double, const std::vector<double> &)>;

struct OptimizeOptions {
  /// Convergence when the best value moves less than this over `patience`
  /// consecutive iterations.
  double tolerance = 1e-8;
  int patience = 5;
  int max_iter = 1000;
  /// Nelder-Mead initial simplex edge.
  double initial_step = 0.1;
  /// BFGS central-difference step and gradient stopping threshold.
  double fd_step = 1e-6;
  double gradient_tolerance = 1e-7;
  /// Worker threads for independent objective evaluations (gradient probes).
  /// The objective must be safe to call concurrently when jobs > 1.
  int jobs = 1;
};

struct OptimizeResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  /// Iterations whose best value dropped by more than the tolerance.
  int improvements = 0;
  long evaluations = 0;
  bool converged = false;
  /// Best value after each iteration; entry 0 is the initial point.
  std::vector<double> trace;
};

/// Reflection, expansion, contraction and shrink coefficients 1, 2, 0.5, 0.5.
OptimizeResult nelder_mead(const Objective &f, std::vector<double> x0,
                           const OptimizeOptions &opts,
                           const IterationCallback &on_iter = {});

/// Quasi-Newton with inverse-Hessian updates, central finite-difference
/// gradients and Armijo backtracking.
OptimizeResult bfgs_fd(const Objective &f, std::vector<double> x0,
                       const OptimizeOptions &opts,
                       const IterationCallback &on_iter = {});

/// Central-difference gradient, optionally split across threads.
std::vector<double> fd_gradient(const Objective &f, const std::vector<double> &x,
                                double step, int jobs = 1);

} // namespace walshci
