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

#include "walshci/fcidump.hpp"
#include "walshci/pauli.hpp"

namespace walshci {

/// Spin-orbital layout. Interleaved: spin orbital 2i is spatial orbital i
/// with spin up, 2i+1 the same orbital with spin down. Qubit q is spin
/// orbital q.
enum class SpinOrdering { Interleaved };

/// Jordan-Wigner image of a creation (dagger) or annihilation operator on
/// spin orbital p: (prod_{q<p} Z_q) (X_p -/+ i Y_p) / 2.
QubitOperator jw_ladder(int p, bool dagger, int n_qubits);

/// Qubit Hamiltonian on 2*n_orb qubits:
///   E_core + sum h_pq a+_p a_q + 1/2 sum (pq|rs) a+_p a+_r a_s a_q
/// with real coefficients (the imaginary residue is checked, then dropped).
QubitOperator build_hamiltonian(const FcidumpData &data,
                                SpinOrdering ordering = SpinOrdering::Interleaved);

/// Total number operator sum_q (I - Z_q)/2.
QubitOperator number_operator(int n_qubits);

} // namespace walshci
