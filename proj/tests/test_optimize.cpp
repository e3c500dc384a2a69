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

#include <catch_amalgamated.hpp>

#include <atomic>
#include <cmath>
#include <limits>

#include "walshci/error.hpp"
#include "walshci/optimize.hpp"

using namespace walshci;
using Catch::Matchers::WithinAbs;

namespace {

double rosenbrock(const std::vector<double> &x) {
  double s = 0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    s += 100 * std::pow(x[i + 1] - x[i] * x[i], 2) + std::pow(1 - x[i], 2);
  return s;
}

// Ill-conditioned quadratic with minimum 1.5 at (1, -2, 3).
double quadratic(const std::vector<double> &x) {
  return 1.5 + (x[0] - 1) * (x[0] - 1) + 10 * (x[1] + 2) * (x[1] + 2) +
         100 * (x[2] - 3) * (x[2] - 3) + (x[0] - 1) * (x[1] + 2);
}

using Method = OptimizeResult (*)(const Objective &, std::vector<double>,
                                  const OptimizeOptions &, const IterationCallback &);

} // namespace

TEST_CASE("fd_gradient matches the analytic gradient", "[optimize]") {
  const std::vector<double> x{0.3, -0.7, 1.1};
  const std::vector<double> exact{2 * (x[0] - 1) + (x[1] + 2),
                                  20 * (x[1] + 2) + (x[0] - 1),
                                  200 * (x[2] - 3)};
  for (int jobs : {1, 3}) {
    const auto g = fd_gradient(quadratic, x, 1e-6, jobs);
    for (int i = 0; i < 3; ++i)
      CHECK_THAT(g[std::size_t(i)], WithinAbs(exact[std::size_t(i)], 1e-6));
  }
}

TEST_CASE("both optimizers minimize a quadratic", "[optimize]") {
  OptimizeOptions o;
  o.max_iter = 5000;
  o.tolerance = 1e-12;
  o.patience = 20;
  for (Method m : {Method(&nelder_mead), Method(&bfgs_fd)}) {
    const OptimizeResult r = m(quadratic, {0, 0, 0}, o, {});
    CHECK(r.converged);
    CHECK_THAT(r.value, WithinAbs(1.5, 1e-8));
    CHECK_THAT(r.x[0], WithinAbs(1, 1e-3));
    CHECK_THAT(r.x[1], WithinAbs(-2, 1e-3));
    CHECK_THAT(r.x[2], WithinAbs(3, 1e-3));
  }
}

TEST_CASE("BFGS solves Rosenbrock in several dimensions", "[optimize]") {
  OptimizeOptions o;
  o.max_iter = 2000;
  o.jobs = 2;
  for (std::size_t n : {2u, 4u, 6u}) {
    const OptimizeResult r = bfgs_fd(rosenbrock, std::vector<double>(n, -0.5), o);
    CHECK(r.value < 1e-9);
    for (double xi : r.x)
      CHECK_THAT(xi, WithinAbs(1, 1e-4));
  }
}

TEST_CASE("Nelder-Mead solves two-dimensional Rosenbrock", "[optimize]") {
  OptimizeOptions o;
  o.max_iter = 5000;
  o.tolerance = 1e-14;
  o.patience = 50;
  const OptimizeResult r = nelder_mead(rosenbrock, {-1.2, 1.0}, o);
  CHECK(r.value < 1e-8);
  CHECK_THAT(r.x[0], WithinAbs(1, 1e-3));
}

TEST_CASE("zero iterations return the initial point", "[optimize]") {
  OptimizeOptions o;
  o.max_iter = 0;
  for (Method m : {Method(&nelder_mead), Method(&bfgs_fd)}) {
    const OptimizeResult r = m(quadratic, {0.1, 0.2, 0.3}, o, {});
    CHECK(r.x == std::vector<double>{0.1, 0.2, 0.3});
    CHECK(r.value == quadratic({0.1, 0.2, 0.3}));
    CHECK(r.iterations == 0);
    CHECK(r.improvements == 0);
    CHECK(r.trace.size() == 1);
  }
}

TEST_CASE("best-so-far trace is monotone and mirrored by the callback",
          "[optimize][invariant]") {
  OptimizeOptions o;
  o.max_iter = 200;
  for (Method m : {Method(&nelder_mead), Method(&bfgs_fd)}) {
    std::vector<double> seen;
    const OptimizeResult r = m(rosenbrock, {-1, 2, 0.5}, o,
                               [&](int it, double v, const std::vector<double> &x) {
                                 CHECK(it == int(seen.size()));
                                 CHECK(v == rosenbrock(x));
                                 seen.push_back(v);
                               });
    REQUIRE(r.trace.size() == std::size_t(r.iterations) + 1);
    CHECK(seen == r.trace);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      CHECK(r.trace[i] <= r.trace[i - 1]);
    }
    CHECK(r.value == r.trace.back());
    CHECK(r.value == rosenbrock(r.x));
    CHECK(r.improvements <= r.iterations);
    CHECK(r.evaluations > r.iterations);
  }
}

TEST_CASE("evaluation counter matches objective calls", "[optimize]") {
  OptimizeOptions o;
  o.max_iter = 30;
  for (Method m : {Method(&nelder_mead), Method(&bfgs_fd)}) {
    std::atomic<long> calls{0};
    const OptimizeResult r = m(
        [&](const std::vector<double> &x) {
          ++calls;
          return quadratic(x);
        },
        {0, 0, 0}, o, {});
    CHECK(r.evaluations == calls.load());
  }
}

TEST_CASE("a non-finite objective raises divergence", "[optimize]") {
  const Objective nan_far = [](const std::vector<double> &x) {
    return x[0] > 0.05 ? std::numeric_limits<double>::quiet_NaN() : -x[0];
  };
  OptimizeOptions o;
  for (Method m : {Method(&nelder_mead), Method(&bfgs_fd)}) {
    try {
      (void)m(nan_far, {0.0}, o, {});
      FAIL("expected divergence");
    } catch (const Error &e) {
      CHECK(e.kind() == ErrorKind::Divergence);
    }
  }
}
