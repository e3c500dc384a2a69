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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walshci/circuit.hpp"
#include "walshci/types.hpp"

namespace walshci {

/// An r-bit occupation pattern. Under the interleaved ordering, spin-up
/// orbitals sit on even bits.
struct Determinant {
  Bits bits = 0;
  int r = 0;

  int particle_number() const { return popcount(bits); }
  /// Twice the spin projection: n_up - n_down.
  int sz2() const;
  /// Binary string with qubit 0 leftmost, e.g. 3 on 4 qubits is "1100".
  std::string to_string() const;
  static Determinant parse(std::string_view text);

  auto operator<=>(const Determinant &) const = default;
};

int sz2_of(Bits bits);
std::string format_det(Bits bits, int r);
/// Throws Error(Parse) on characters other than '0'/'1'.
Bits parse_det(std::string_view text);

enum class Symmetry { SpinAndNumber, Number, None };

const char *to_string(Symmetry s);
Symmetry parse_symmetry(std::string_view text);

struct SubspaceSpec {
  int r = 0;
  Symmetry symmetry = Symmetry::SpinAndNumber;
  int n_elec = 0;
  int sz2 = 0;
  std::optional<std::vector<Bits>> explicit_dets;
};

/// Ascending determinant list for the spec. Throws Error(EmptySpace) for an
/// infeasible sector and Error(Duplicate) for repeated explicit entries.
std::vector<Bits> enumerate_determinants(const SubspaceSpec &spec);

/// |0>^r -> uniform superposition over all weight-n strings (split and
/// cyclic shift construction, O(r n) CNOTs, no ancillas).
Circuit dicke_circuit(int r, int n_elec);

/// |0>^r -> D^{-1/2} sum_k |dets_k> with real nonnegative amplitudes.
/// Built as the inverse of a pairwise merge cascade; each merge costs at
/// most r - 1 CNOTs plus one multi-controlled RY.
Circuit sparse_superposition_circuit(const std::vector<Bits> &dets, int r);

/// Worst-case CNOT count of sparse_superposition_circuit for D determinants
/// on r qubits.
std::size_t sparse_cnot_bound(std::size_t D, int r);

struct PreparedSubspace {
  Circuit circuit;
  std::vector<Bits> dets;
};

/// Dispatches on the symmetry: none -> H on every qubit, number -> Dicke,
/// spin-and-number or explicit determinants -> sparse preparation.
PreparedSubspace prepare_subspace(const SubspaceSpec &spec);

} // namespace walshci
