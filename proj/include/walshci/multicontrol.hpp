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

#include <span>

#include "walshci/circuit.hpp"

namespace walshci {

/// Emits multi-controlled gates into a circuit using only the elementary
/// alphabet. All constructions are ancilla-free: spare register qubits are
/// borrowed in whatever state they hold and restored afterwards.
///
/// Toffolis use the 6-CNOT network with T = RZ(pi/4), which equals the
/// Toffoli up to a global phase e^{-i pi/8}. Successive Toffolis alternate
/// between that network and its adjoint so the phases cancel pairwise;
/// every composite gate below emits an even number of Toffolis.
class MultiControlBuilder {
public:
  explicit MultiControlBuilder(Circuit &circuit) : circuit_(circuit) {}

  void toffoli(int c1, int c2, int target);

  /// X on target when every control is 1, using `pool` as borrowed qubits
  /// (needs controls.size() - 2 of them for three or more controls).
  void mcx_dirty(std::span<const int> controls, int target,
                 std::span<const int> pool);

  /// X on target when every control is 1, borrowing the single qubit
  /// `borrowed` (which must not be a control or the target).
  void mcx(std::span<const int> controls, int target, int borrowed);

  /// RY(angle) on target when every control is 1. No extra qubits needed.
  void mcry(std::span<const int> controls, int target, double angle);

  /// Toffolis emitted so far; even after every complete composite gate.
  int toffoli_count() const { return toffolis_; }

private:
  Circuit &circuit_;
  int toffolis_ = 0;
};

/// CNOT cost (CRY counted as 2) of MultiControlBuilder::mcry with c controls.
std::size_t mcry_cnot_cost(std::size_t controls);

} // namespace walshci
