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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "walshci/ci.hpp"
#include "walshci/circuit.hpp"
#include "walshci/optimize.hpp"
#include "walshci/pauli.hpp"
#include "walshci/statevector.hpp"
#include "walshci/subspace.hpp"
#include "walshci/walsh.hpp"

namespace walshci {

struct WalshOptions {
  double factor = 2.0;
  std::uint64_t seed = 0;
  /// Reduce the oversampled index set to exactly D columns.
  bool use_qr = true;
};

/// Everything an energy evaluation needs, built once per run.
struct VqeProblem {
  QubitOperator hamiltonian;
  int r = 0;
  std::vector<Bits> dets;
  Circuit subspace_circuit;
  PartialWFT wft;
  /// Hamiltonian restricted to dets.
  Eigen::MatrixXd h_sub;
  /// Oversampling diagnostics.
  std::size_t requested_indices = 0;
  bool clamped = false;
};

VqeProblem build_problem(QubitOperator hamiltonian, PreparedSubspace subspace,
                         const WalshOptions &walsh);

enum class EnergyMode { Exact, Shots };
enum class OptimizerKind { NelderMead, BfgsFd };

const char *to_string(EnergyMode m);
const char *to_string(OptimizerKind k);

struct InitPolicy {
  enum class Kind { UniformTarget, CiSeed, Random, Explicit };
  Kind kind = Kind::UniformTarget;
  CiVector ci;              // CiSeed
  double scale = 0.1;       // Random: normal standard deviation
  std::uint64_t seed = 0;   // Random
  std::vector<double> angles; // Explicit, aligned with the problem indices
};

struct VqeConfig {
  EnergyMode mode = EnergyMode::Exact;
  std::uint64_t shots = 1024;
  std::uint64_t seed = 0;
  OptimizerKind optimizer = OptimizerKind::BfgsFd;
  double tolerance = 1e-8;
  int patience = 5;
  int max_iter = 1000;
  InitPolicy init;
  int jobs = 1;
  /// JSON-lines sink for {iter, energy, p_success}; may be null.
  std::ostream *trace = nullptr;
};

struct TracePoint {
  int iter = 0;
  double energy = 0.0;
  double p_success = 0.0;
};

struct VqeResult {
  /// Exact mode: the optimum. Shot mode: an independent estimate at the
  /// returned parameters.
  double energy = 0.0;
  /// Best objective value seen by the optimizer (last trace entry).
  double best_estimate = 0.0;
  AnsatzParams params;
  int iterations = 0;
  int improvements = 0;
  long evaluations = 0;
  double p_success = 0.0;
  bool converged = false;
  OptimizerKind optimizer_used = OptimizerKind::BfgsFd;
  std::vector<TracePoint> trace;
};

/// Initial angles for the problem's index set under the policy.
std::vector<double> initial_angles(const VqeProblem &problem,
                                   const InitPolicy &init);

/// <v|H_sub|v> with v the normalized predicted amplitudes.
double energy_exact(const Eigen::VectorXd &angles, const PartialWFT &wft,
                    const Eigen::MatrixXd &h_sub);

/// Walsh-ancilla success probability (1/D) sum_k cos^2 f(k).
double success_probability(const Eigen::VectorXd &angles, const PartialWFT &wft);

AnsatzParams make_params(const PartialWFT &wft, const std::vector<double> &angles);

/// Full dilated-circuit state on r + 1 qubits.
Statevector simulate_ansatz(const VqeProblem &problem, const AnsatzParams &params);

/// Energy from simulation: project the Walsh ancilla onto 0, then take the
/// expectation of the Hamiltonian.
double energy_simulated(const VqeProblem &problem, const AnsatzParams &params);

/// Appends a Hadamard test of `pauli` with the test ancilla on a new top
/// wire (index base.n_qubits()).
Circuit hadamard_test_circuit(const Circuit &base, const PauliTerm &pauli);

struct ShotEstimate {
  double energy = 0.0;
  double p_success = 0.0;
};

/// Equal shots per non-identity term. Both ancillas are sampled together and
/// shots with the Walsh ancilla at 1 are discarded. Throws
/// Error(EstimationFailure) if a term keeps no shots.
ShotEstimate energy_shots(const VqeProblem &problem, const AnsatzParams &params,
                          std::uint64_t shots, std::uint64_t seed);

VqeResult run_vqe(const VqeConfig &config, const VqeProblem &problem);

} // namespace walshci
