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
#include <map>
#include <vector>

#include "walshci/circuit.hpp"
#include "walshci/pauli.hpp"
#include "walshci/types.hpp"

namespace walshci {

/// Dense amplitude vector over n qubits; amplitude k belongs to the basis
/// state whose bit q is the value of qubit q.
class Statevector {
public:
  static constexpr int kMaxQubits = 16;

  /// |0...0> on n qubits.
  explicit Statevector(int n_qubits = 0);
  static Statevector basis(int n_qubits, Bits index);
  /// Takes ownership of amplitudes; size must be a power of two.
  static Statevector from_amplitudes(std::vector<cplx> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  const std::vector<cplx> &amplitudes() const { return amps_; }
  cplx operator[](std::size_t i) const { return amps_[i]; }
  cplx &operator[](std::size_t i) { return amps_[i]; }

  double norm_squared() const;

  /// In-place application of one gate.
  void apply(const Gate &g);
  void apply(const Circuit &c);

  /// Tensor product with |0> on `extra` new high-order qubits.
  Statevector extended(int extra) const;

private:
  int n_qubits_;
  std::vector<cplx> amps_;
};

/// Returns circuit * state. Throws Error(WidthMismatch) on width mismatch.
Statevector apply_circuit(Statevector state, const Circuit &circuit);

/// <state|op|state> for a Hermitian op. Throws Error(Hermiticity) when the
/// imaginary residue exceeds 1e-10.
double expectation(const Statevector &state, const QubitOperator &op);

struct Projection {
  Statevector state;
  double probability = 0.0;
};

/// Postselects `qubit` on `outcome` and renormalizes. Throws
/// Error(ImpossibleOutcome) when the probability is below 1e-14.
Projection project_qubit(const Statevector &state, int qubit, int outcome);

/// Probability that `qubit` reads `outcome`.
double outcome_probability(const Statevector &state, int qubit, int outcome);

/// Multinomial draw of `shots` samples from |amplitude|^2 by inverse CDF.
/// Deterministic for a fixed seed.
std::map<Bits, std::uint64_t> sample(const Statevector &state,
                                     std::uint64_t shots, std::uint64_t seed);

/// |<a|b>|^2.
double fidelity(const Statevector &a, const Statevector &b);

/// "index re im" per line, skipping amplitudes below `threshold`.
void write_statevector(std::ostream &out, const Statevector &s,
                       double threshold = 0.0);

} // namespace walshci
