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

#include "walshci/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "walshci/error.hpp"

namespace walshci {

namespace {

class Counted {
public:
  explicit Counted(const Objective &f) : f_(f) {}
  double operator()(const std::vector<double> &x) {
    ++count;
    const double v = f_(x);
    if (!std::isfinite(v))
      throw Error(ErrorKind::Divergence,
                  "objective returned a non-finite value after " +
                      std::to_string(count) + " evaluations");
    return v;
  }
  long count = 0;

private:
  const Objective &f_;
};

// Patience-window test on the best-so-far trace.
bool settled(const std::vector<double> &trace, const OptimizeOptions &opts) {
  const auto p = static_cast<std::size_t>(std::max(1, opts.patience));
  if (trace.size() <= p)
    return false;
  return std::abs(trace[trace.size() - 1 - p] - trace.back()) < opts.tolerance;
}

void note_iteration(OptimizeResult &res, double prev_best,
                    const OptimizeOptions &opts, const IterationCallback &cb) {
  const double best = res.value;
  ++res.iterations;
  if (prev_best - best > opts.tolerance)
    ++res.improvements;
  res.trace.push_back(best);
  if (cb)
    cb(res.iterations, best, res.x);
}

void check_options(const OptimizeOptions &opts) {
  if (!(opts.tolerance > 0.0))
    throw Error(ErrorKind::Config, "tolerance must be positive");
  if (opts.max_iter < 0)
    throw Error(ErrorKind::Config, "max_iter must be >= 0");
}

} // namespace

OptimizeResult nelder_mead(const Objective &f, std::vector<double> x0,
                           const OptimizeOptions &opts,
                           const IterationCallback &on_iter) {
  check_options(opts);
  constexpr double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
  Counted eval(f);
  const std::size_t n = x0.size();
  OptimizeResult res;
  res.x = x0;
  res.value = eval(x0);
  res.trace.push_back(res.value);
  if (on_iter)
    on_iter(0, res.value, res.x);
  if (opts.max_iter == 0 || n == 0) {
    res.evaluations = eval.count;
    return res;
  }

  std::vector<std::vector<double>> simplex(n + 1, x0);
  std::vector<double> values(n + 1, res.value);
  for (std::size_t i = 0; i < n; ++i) {
    simplex[i + 1][i] += opts.initial_step;
    values[i + 1] = eval(simplex[i + 1]);
  }
  std::vector<std::size_t> order(n + 1);
  auto point = [&](const std::vector<double> &c, const std::vector<double> &w,
                   double t) {
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i)
      p[i] = c[i] + t * (w[i] - c[i]);
    return p;
  };

  while (res.iterations < opts.max_iter) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front(), worst = order.back(),
                      second = order[n - 1];
    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        centroid[i] += simplex[order[k]][i] / static_cast<double>(n);

    const auto xr = point(centroid, simplex[worst], -alpha);
    const double fr = eval(xr);
    if (fr < values[best]) {
      const auto xe = point(centroid, simplex[worst], -gamma);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[worst] = xe;
        values[worst] = fe;
      } else {
        simplex[worst] = xr;
        values[worst] = fr;
      }
    } else if (fr < values[second]) {
      simplex[worst] = xr;
      values[worst] = fr;
    } else {
      const bool outside = fr < values[worst];
      const auto xc = outside ? point(centroid, xr, rho)
                              : point(centroid, simplex[worst], rho);
      const double fc = eval(xc);
      if (fc < (outside ? fr : values[worst])) {
        simplex[worst] = xc;
        values[worst] = fc;
      } else {
        for (std::size_t k = 1; k <= n; ++k) {
          const std::size_t v = order[k];
          simplex[v] = point(simplex[best], simplex[v], sigma);
          values[v] = eval(simplex[v]);
        }
      }
    }

    const double prev = res.value;
    const auto it = std::min_element(values.begin(), values.end());
    if (*it < res.value) {
      res.value = *it;
      res.x = simplex[static_cast<std::size_t>(it - values.begin())];
    }
    note_iteration(res, prev, opts, on_iter);
    if (settled(res.trace, opts)) {
      res.converged = true;
      break;
    }
  }
  res.evaluations = eval.count;
  return res;
}

std::vector<double> fd_gradient(const Objective &f, const std::vector<double> &x,
                                double step, int jobs) {
  const std::size_t n = x.size();
  std::vector<double> g(n);
  auto work = [&](std::size_t lo, std::size_t hi) {
    std::vector<double> probe = x;
    for (std::size_t i = lo; i < hi; ++i) {
      probe[i] = x[i] + step;
      const double fp = f(probe);
      probe[i] = x[i] - step;
      const double fm = f(probe);
      probe[i] = x[i];
      g[i] = (fp - fm) / (2.0 * step);
    }
  };
  const auto threads = static_cast<std::size_t>(
      std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(n, 1))));
  if (threads <= 1) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
      if (lo < hi)
        pool.emplace_back(work, lo, hi);
    }
    for (auto &th : pool)
      th.join();
  }
  for (double v : g)
    if (!std::isfinite(v))
      throw Error(ErrorKind::Divergence, "non-finite gradient component");
  return g;
}

OptimizeResult bfgs_fd(const Objective &f, std::vector<double> x0,
                       const OptimizeOptions &opts,
                       const IterationCallback &on_iter) {
  check_options(opts);
  Counted eval(f);
  const std::size_t n = x0.size();
  OptimizeResult res;
  res.x = std::move(x0);
  res.value = eval(res.x);
  res.trace.push_back(res.value);
  if (on_iter)
    on_iter(0, res.value, res.x);
  if (opts.max_iter == 0 || n == 0) {
    res.evaluations = eval.count;
    return res;
  }

  auto grad = [&](const std::vector<double> &x) {
    res.evaluations += static_cast<long>(2 * n);
    return fd_gradient(f, x, opts.fd_step, opts.jobs);
  };
  auto inf_norm = [](const std::vector<double> &v) {
    double m = 0.0;
    for (double e : v)
      m = std::max(m, std::abs(e));
    return m;
  };

  std::vector<double> g = grad(res.x);
  if (inf_norm(g) < opts.gradient_tolerance) {
    res.converged = true;
    res.evaluations += eval.count;
    return res;
  }
  // Row-major inverse Hessian approximation.
  std::vector<double> hinv(n * n, 0.0);
  auto reset = [&] {
    std::fill(hinv.begin(), hinv.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      hinv[i * n + i] = 1.0;
  };
  reset();
  bool fresh = true;
  std::vector<double> p(n), xn(n), s(n), y(n), hy(n);

  while (res.iterations < opts.max_iter) {
    double slope = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        acc -= hinv[i * n + k] * g[k];
      p[i] = acc;
      slope += acc * g[i];
    }
    if (!(slope < 0.0)) {
      reset();
      fresh = true;
      for (std::size_t i = 0; i < n; ++i)
        p[i] = -g[i];
      slope = -std::inner_product(g.begin(), g.end(), g.begin(), 0.0);
    }

    double t = 1.0, fn = 0.0;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      for (std::size_t i = 0; i < n; ++i)
        xn[i] = res.x[i] + t * p[i];
      fn = eval(xn);
      if (fn <= res.value + 1e-4 * t * slope) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    const double prev = res.value;
    if (!accepted && !fresh) {
      reset();
      fresh = true;
      continue;
    }
    if (!accepted) {
      // No descent even along steepest descent: the point is stationary to
      // the resolution of the gradient.
      note_iteration(res, prev, opts, on_iter);
      res.converged = true;
      break;
    }

    std::vector<double> gn = grad(xn);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = xn[i] - res.x[i];
      y[i] = gn[i] - g[i];
    }
    const double sy = std::inner_product(s.begin(), s.end(), y.begin(), 0.0);
    if (sy > 1e-14) {
      fresh = false;
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k)
          acc += hinv[i * n + k] * y[k];
        hy[i] = acc;
      }
      const double yhy = std::inner_product(y.begin(), y.end(), hy.begin(), 0.0);
      const double c1 = (sy + yhy) / (sy * sy);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          hinv[i * n + k] += c1 * s[i] * s[k] -
                             (hy[i] * s[k] + s[i] * hy[k]) / sy;
    }
    res.x = xn;
    res.value = fn;
    g = std::move(gn);
    note_iteration(res, prev, opts, on_iter);
    if (inf_norm(g) < opts.gradient_tolerance || settled(res.trace, opts)) {
      res.converged = true;
      break;
    }
  }
  res.evaluations += eval.count;
  return res;
}

} // namespace walshci
