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

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace walshci {

enum class GateKind { H, X, RY, RZ, CNOT, CRY };

const char *to_string(GateKind kind);

/// One elementary gate. RY(t) = exp(-i t Y/2), RZ(t) = diag(e^{-it/2},
/// e^{+it/2}). `control` is -1 for single-qubit gates.
struct Gate {
  GateKind kind = GateKind::H;
  int target = 0;
  int control = -1;
  double angle = 0.0;

  bool is_controlled() const { return control >= 0; }
  bool operator==(const Gate &) const = default;
};

class Circuit {
public:
  explicit Circuit(int n_qubits = 0);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate> &gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  Circuit &h(int q);
  Circuit &x(int q);
  Circuit &ry(int q, double angle);
  Circuit &rz(int q, double angle);
  Circuit &cnot(int control, int target);
  Circuit &cry(int control, int target, double angle);
  Circuit &add(const Gate &g);

  /// Appends `other`, mapping its qubit i onto wire wires[i]. An empty span
  /// means the identity mapping.
  Circuit &append(const Circuit &other, std::span<const int> wires = {});

  /// Number of CNOTs, counting each CRY as two.
  std::size_t cnot_count() const;
  std::size_t count(GateKind kind) const;

  Circuit inverse() const;

private:
  void check_qubit(int q) const;

  int n_qubits_;
  std::vector<Gate> gates_;
};

void write_circuit(std::ostream &out, const Circuit &c);

} // namespace walshci
