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

#include <vector>

#include <Eigen/Dense>

#include "walshci/pauli.hpp"
#include "walshci/types.hpp"

namespace walshci {

/// Real CI expansion over an ascending list of distinct determinants.
struct CiVector {
  std::vector<Bits> dets;
  std::vector<double> coeffs;

  std::size_t size() const { return dets.size(); }
  /// Throws Error(Consistency) on unsorted/duplicate dets, size mismatch or
  /// a norm off by more than 1e-10.
  void validate() const;
  /// Coefficient of det, 0 if absent.
  double coefficient(Bits det) const;
};

/// H_kl = <det_k| op |det_l>.
Eigen::MatrixXd subspace_hamiltonian(const QubitOperator &op,
                                     const std::vector<Bits> &dets);

struct Eigensystem {
  Eigen::VectorXd values;  // ascending
  Eigen::MatrixXd vectors; // columns
};

/// Dense symmetric eigendecomposition. Throws Error(Consistency) for a
/// non-symmetric matrix.
Eigensystem diagonalize_subspace(const Eigen::MatrixXd &h);

struct GroundState {
  double energy = 0.0;
  CiVector vector;
};

/// Lowest eigenpair over dets, sign fixed so the largest component is
/// positive.
GroundState ground_state(const QubitOperator &op, const std::vector<Bits> &dets);
GroundState ground_state(const Eigen::MatrixXd &h, const std::vector<Bits> &dets);

/// Dets with |c| > epsilon plus all of their single and double excitations
/// within the (n_elec, sz2) sector on r qubits, ascending.
std::vector<Bits> sci_select(const CiVector &reference, double epsilon, int r,
                             int n_elec, int sz2);

struct Comparison {
  double energy = 0.0;
  double energy_error = 0.0;
  double fidelity = 0.0;
};

/// Embeds state into oracle's determinant list (absent entries are zero)
/// and compares against it; h is the matrix over oracle.dets and
/// oracle_energy its reference value.
Comparison energy_and_fidelity(const CiVector &state, const CiVector &oracle,
                               const Eigen::MatrixXd &h, double oracle_energy);

} // namespace walshci
