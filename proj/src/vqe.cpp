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

#include "walshci/vqe.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include <json.hpp>

#include "walshci/error.hpp"

namespace walshci {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Eigen::VectorXd to_eigen(const std::vector<double> &v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(),
                                           static_cast<Eigen::Index>(v.size()));
}

} // namespace

const char *to_string(EnergyMode m) {
  return m == EnergyMode::Exact ? "exact" : "shots";
}

const char *to_string(OptimizerKind k) {
  return k == OptimizerKind::NelderMead ? "nelder-mead" : "bfgs-fd";
}

VqeProblem build_problem(QubitOperator hamiltonian, PreparedSubspace subspace,
                         const WalshOptions &walsh) {
  VqeProblem p;
  p.r = subspace.circuit.n_qubits();
  if (hamiltonian.n_qubits() > p.r)
    throw Error(ErrorKind::WidthMismatch,
                "Hamiltonian acts on more qubits than the register");
  const auto over =
      oversample_walsh_indices(subspace.dets.size(), p.r, walsh.factor, walsh.seed);
  p.requested_indices = over.requested;
  p.clamped = over.clamped;
  p.wft = make_wft(subspace.dets, over.indices);
  if (walsh.use_qr) {
    p.wft = qr_select(p.wft);
  } else if (p.wft.rank() < static_cast<Eigen::Index>(p.wft.rows())) {
    throw Error(ErrorKind::Rank, "oversampled Walsh transform is rank deficient");
  }
  p.h_sub = subspace_hamiltonian(hamiltonian, subspace.dets);
  p.dets = std::move(subspace.dets);
  p.subspace_circuit = std::move(subspace.circuit);
  p.hamiltonian = std::move(hamiltonian);
  return p;
}

std::vector<double> initial_angles(const VqeProblem &problem,
                                   const InitPolicy &init) {
  const std::size_t D = problem.dets.size();
  switch (init.kind) {
  case InitPolicy::Kind::UniformTarget: {
    const std::vector<double> theta(D, std::acos(1.0 / std::sqrt(double(D))));
    return solve_params(problem.wft, theta).angles;
  }
  case InitPolicy::Kind::CiSeed: {
    std::vector<double> c(D);
    double norm2 = 0.0;
    for (std::size_t k = 0; k < D; ++k) {
      c[k] = init.ci.coefficient(problem.dets[k]);
      norm2 += c[k] * c[k];
    }
    if (!(norm2 > 0.0))
      throw Error(ErrorKind::DegenerateState,
                  "seed vector has no weight on the selected determinants");
    for (double &v : c)
      v /= std::sqrt(norm2);
    return solve_params(problem.wft, angles_from_ci(c)).angles;
  }
  case InitPolicy::Kind::Random: {
    std::mt19937_64 rng(init.seed);
    std::normal_distribution<double> n(0.0, init.scale);
    std::vector<double> a(problem.wft.cols());
    for (double &v : a)
      v = n(rng);
    return a;
  }
  case InitPolicy::Kind::Explicit:
    if (init.angles.size() != problem.wft.cols())
      throw Error(ErrorKind::DimensionMismatch,
                  "initial angles do not match the Walsh index count");
    return init.angles;
  }
  throw Error(ErrorKind::Config, "unknown init policy");
}

double energy_exact(const Eigen::VectorXd &angles, const PartialWFT &wft,
                    const Eigen::MatrixXd &h_sub) {
  const Eigen::VectorXd v = predicted_amplitudes(wft, angles);
  return v.dot(h_sub * v);
}

double success_probability(const Eigen::VectorXd &angles, const PartialWFT &wft) {
  const Eigen::VectorXd c = (wft.matrix * angles).array().cos().matrix();
  return c.squaredNorm() / static_cast<double>(c.size());
}

AnsatzParams make_params(const PartialWFT &wft,
                         const std::vector<double> &angles) {
  if (angles.size() != wft.cols())
    throw Error(ErrorKind::DimensionMismatch, "angle count mismatch");
  return {wft.indices, angles};
}

Statevector simulate_ansatz(const VqeProblem &problem,
                            const AnsatzParams &params) {
  const Circuit c = dilated_ansatz_circuit(params, problem.subspace_circuit);
  return apply_circuit(Statevector(c.n_qubits()), c);
}

double energy_simulated(const VqeProblem &problem, const AnsatzParams &params) {
  const Statevector full = simulate_ansatz(problem, params);
  const Projection post = project_qubit(full, problem.r, 0);
  return expectation(post.state, problem.hamiltonian);
}

Circuit hadamard_test_circuit(const Circuit &base, const PauliTerm &pauli) {
  const int n = base.n_qubits();
  if ((pauli.x | pauli.z) >> n)
    throw Error(ErrorKind::WidthMismatch, "Pauli string wider than the base");
  Circuit c(n + 1);
  c.append(base);
  const int t = n;
  c.h(t);
  for (int q = 0; q < n; ++q) {
    switch (pauli.letter(q)) {
    case 'X':
      c.cnot(t, q);
      break;
    case 'Z':
      c.h(q).cnot(t, q).h(q);
      break;
    case 'Y':
      c.rz(q, -std::numbers::pi / 2).cnot(t, q).rz(q, std::numbers::pi / 2);
      break;
    default:
      break;
    }
  }
  c.h(t);
  return c;
}

ShotEstimate energy_shots(const VqeProblem &problem, const AnsatzParams &params,
                          std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0)
    throw Error(ErrorKind::Config, "shots must be >= 1");
  const Statevector base = simulate_ansatz(problem, params).extended(1);
  const int walsh_anc = problem.r, test_anc = problem.r + 1;
  ShotEstimate est;
  std::uint64_t kept_total = 0, drawn_total = 0;
  std::uint64_t term_index = 0;
  for (const auto &[key, coeff] : problem.hamiltonian.terms()) {
    const PauliTerm term{key.first, key.second, coeff};
    if (term.is_identity()) {
      est.energy += coeff.real();
      continue;
    }
    const Circuit tail = hadamard_test_circuit(Circuit(problem.r + 1), term);
    const Statevector s = apply_circuit(base, tail);
    const auto counts = sample(s, shots, mix_seed(seed, term_index++));
    std::uint64_t n0 = 0, n1 = 0;
    for (const auto &[outcome, n] : counts) {
      if ((outcome >> walsh_anc) & 1U)
        continue;
      ((outcome >> test_anc) & 1U ? n1 : n0) += n;
    }
    if (n0 + n1 == 0)
      throw Error(ErrorKind::EstimationFailure,
                  "no postselected shots for term " +
                      term.letters(problem.r));
    kept_total += n0 + n1;
    drawn_total += shots;
    est.energy += coeff.real() * (static_cast<double>(n0) - static_cast<double>(n1)) /
                  static_cast<double>(n0 + n1);
  }
  est.p_success = drawn_total == 0
                      ? success_probability(to_eigen(params.angles), problem.wft)
                      : static_cast<double>(kept_total) /
                            static_cast<double>(drawn_total);
  return est;
}

VqeResult run_vqe(const VqeConfig &config, const VqeProblem &problem) {
  if (!(config.tolerance > 0.0))
    throw Error(ErrorKind::Config, "tolerance must be positive");
  if (config.mode == EnergyMode::Shots && config.shots == 0)
    throw Error(ErrorKind::Config, "shots must be >= 1");

  VqeResult res;
  res.optimizer_used = config.mode == EnergyMode::Shots
                           ? OptimizerKind::NelderMead
                           : config.optimizer;
  const std::vector<double> x0 = initial_angles(problem, config.init);

  // Shot-mode evaluations draw from a fresh stream each call so repeated
  // runs with one seed are identical.
  std::uint64_t evals = 0;
  double last_p = 0.0;
  Objective objective;
  if (config.mode == EnergyMode::Exact) {
    objective = [&problem](const std::vector<double> &a) {
      return energy_exact(to_eigen(a), problem.wft, problem.h_sub);
    };
  } else {
    objective = [&](const std::vector<double> &a) {
      const auto e = energy_shots(problem, make_params(problem.wft, a),
                                  config.shots, mix_seed(config.seed, evals++));
      last_p = e.p_success;
      return e.energy;
    };
  }

  auto on_iter = [&](int iter, double energy, const std::vector<double> &x) {
    const double p = config.mode == EnergyMode::Exact
                         ? success_probability(to_eigen(x), problem.wft)
                         : last_p;
    res.trace.push_back({iter, energy, p});
    if (config.trace) {
      nlohmann::json line = {{"iter", iter}, {"energy", energy}, {"p_success", p}};
      *config.trace << line.dump() << '\n';
    }
  };
  OptimizeOptions opts;
  opts.tolerance = config.tolerance;
  opts.patience = config.patience;
  opts.max_iter = config.max_iter;
  opts.jobs = config.mode == EnergyMode::Exact ? config.jobs : 1;

  OptimizeResult out;
  if (res.optimizer_used == OptimizerKind::NelderMead)
    out = nelder_mead(objective, x0, opts, on_iter);
  else
    out = bfgs_fd(objective, x0, opts, on_iter);

  res.params = make_params(problem.wft, out.x);
  res.best_estimate = out.value;
  res.iterations = out.iterations;
  res.improvements = out.improvements;
  res.evaluations = out.evaluations;
  res.converged = out.converged;
  if (config.mode == EnergyMode::Exact) {
    res.energy = out.value;
    res.p_success = success_probability(to_eigen(out.x), problem.wft);
  } else {
    // The minimum over noisy estimates is biased low, so the reported energy
    // is a fresh estimate on a stream no optimizer call has used.
    const ShotEstimate fresh =
        energy_shots(problem, res.params, config.shots, mix_seed(config.seed, evals));
    res.energy = fresh.energy;
    res.p_success = fresh.p_success;
  }
  return res;
}

} // namespace walshci
