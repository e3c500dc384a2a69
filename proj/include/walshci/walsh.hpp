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
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "walshci/circuit.hpp"
#include "walshci/types.hpp"

namespace walshci {

/// Walsh index over the dilated register. Bit 0 is the ancilla; bit b >= 1
/// is system qubit b - 1. Ansatz terms always have bit 0 set.
using WalshIndex = std::uint64_t;

inline Bits system_bits(WalshIndex j) { return j >> 1; }

/// Parity of popcount(k & system_bits(j)).
inline int binary_inner(Bits k, WalshIndex j) {
  return parity(k & system_bits(j));
}

struct OversampledIndices {
  std::vector<WalshIndex> indices; // ascending, distinct, odd
  std::size_t requested = 0;
  bool clamped = false;
};

/// M = min(ceil(factor * D * max(1, log2 D)), 2^r) distinct odd indices
/// drawn uniformly without replacement.
OversampledIndices oversample_walsh_indices(std::size_t D, int r,
                                            double factor,
                                            std::uint64_t seed);

/// Default oversampling factor for a named system; 2 when not listed.
double default_oversampling_factor(std::string_view system);

struct PartialWFT {
  std::vector<Bits> dets;
  std::vector<WalshIndex> indices;
  /// D x M, entry (k, j) = (-1)^{binary_inner(dets[k], indices[j])}.
  Eigen::MatrixXd matrix;

  std::size_t rows() const { return dets.size(); }
  std::size_t cols() const { return indices.size(); }
  Eigen::Index rank() const;
};

PartialWFT make_wft(std::vector<Bits> dets, std::vector<WalshIndex> indices);

/// Keeps D columns chosen by column-pivoted Householder QR, in their
/// original order. Throws Error(Rank) if the input is rank deficient.
PartialWFT qr_select(const PartialWFT &wft);

struct AnsatzParams {
  std::vector<WalshIndex> indices;
  std::vector<double> angles;

  std::size_t size() const { return angles.size(); }
};

/// Exact solve when square, minimum-norm least squares when oversampled.
AnsatzParams solve_params(const PartialWFT &wft,
                          const std::vector<double> &targets);

/// theta_k = arccos(c_k). Throws Error(Domain) when |c_k| > 1.
std::vector<double> angles_from_ci(const std::vector<double> &c);

/// f(k) = sum_j a_j (-1)^{binary_inner(k, j)}.
double walsh_phase(const AnsatzParams &params, Bits k);

/// Normalized cos(f(k)) over dets. Throws Error(DegenerateState) if all
/// entries vanish.
std::vector<double> predicted_amplitudes(const AnsatzParams &params,
                                         const std::vector<Bits> &dets);

/// Same as above with the WFT matrix precomputed (fast path).
Eigen::VectorXd predicted_amplitudes(const PartialWFT &wft,
                                     const Eigen::VectorXd &angles);

/// Reduces an angle to (-pi, pi].
double wrap_angle(double a);

/// prod_j exp(i a_j W_j) on n_qubits wires; the ancilla (index bit 0) is
/// wire n_qubits - 1 and index bit b >= 1 is wire b - 1. Terms are sorted by
/// Gray rank of their system part and consecutive parity folds share CNOTs.
Circuit diagonal_circuit(const AnsatzParams &params, int n_qubits);

/// Term-by-term synthesis in input order: fold, RZ, unfold for every term.
Circuit naive_diagonal_circuit(const AnsatzParams &params, int n_qubits);

/// subspace circuit on wires 0..r-1, then H, diagonal, H on ancilla wire r.
Circuit dilated_ansatz_circuit(const AnsatzParams &params,
                               const Circuit &subspace_circuit);

} // namespace walshci
