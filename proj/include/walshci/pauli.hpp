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

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "walshci/types.hpp"

namespace walshci {

/// A Pauli string with a complex coefficient. The letter on qubit q is
/// determined by bit q of (x, z): (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y.
/// The coefficient multiplies the plain tensor product of letters.
struct PauliTerm {
  Bits x = 0;
  Bits z = 0;
  cplx coefficient{1.0, 0.0};

  char letter(int qubit) const;
  /// Letters for qubits 0..n-1, qubit 0 leftmost.
  std::string letters(int n_qubits) const;
  bool is_identity() const { return x == 0 && z == 0; }
};

/// Product a*b including the phase picked up from Pauli commutation.
PauliTerm multiply_terms(const PauliTerm &a, const PauliTerm &b);

/// Weighted sum of Pauli strings on a fixed number of qubits.
class QubitOperator {
public:
  using Key = std::pair<Bits, Bits>;
  using TermMap = std::map<Key, cplx>;

  static constexpr double kPruneTolerance = 1e-12;

  explicit QubitOperator(int n_qubits = 0);
  static QubitOperator identity(int n_qubits, cplx coefficient = 1.0);
  static QubitOperator single(int n_qubits, const PauliTerm &term);

  int n_qubits() const { return n_qubits_; }
  const TermMap &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  cplx coefficient(Bits x, Bits z) const;

  void add(const PauliTerm &term);
  void add(Bits x, Bits z, cplx coefficient);

  QubitOperator &operator+=(const QubitOperator &other);
  QubitOperator &operator*=(cplx scalar);
  friend QubitOperator operator+(QubitOperator a, const QubitOperator &b) {
    return a += b;
  }
  friend QubitOperator operator*(const QubitOperator &a,
                                 const QubitOperator &b);
  friend QubitOperator operator*(QubitOperator a, cplx s) { return a *= s; }
  friend QubitOperator operator*(cplx s, QubitOperator a) { return a *= s; }

  /// Drops terms with |coefficient| below tol.
  void prune(double tol = kPruneTolerance);

  /// Largest |Im(coefficient)| over all terms.
  double max_imaginary() const;
  bool is_hermitian(double tol = 1e-12) const {
    return max_imaginary() <= tol;
  }

  /// Sum of |coefficient| over all terms; an upper bound on the operator norm.
  double one_norm() const;

  std::string to_string() const;

private:
  int n_qubits_;
  TermMap terms_;
};

/// [a, b] = ab - ba, pruned.
QubitOperator commutator(const QubitOperator &a, const QubitOperator &b);

/// <bra| op |ket> for computational basis states.
cplx matrix_element(const QubitOperator &op, Bits bra, Bits ket);

/// Phase picked up by a Pauli string mapping |ket> to |ket ^ x>.
cplx pauli_phase(Bits x, Bits z, Bits ket);

/// Line-oriented text format: "re im x_mask_hex z_mask_hex" per term,
/// preceded by a "qubits N" header line.
void write_operator(std::ostream &out, const QubitOperator &op);
QubitOperator read_operator(std::istream &in);

} // namespace walshci
