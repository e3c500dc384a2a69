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

#include "walshci/circuit.hpp"

#include <ostream>

#include "walshci/error.hpp"

namespace walshci {

const char *to_string(GateKind kind) {
  switch (kind) {
  case GateKind::H:
    return "H";
  case GateKind::X:
    return "X";
  case GateKind::RY:
    return "RY";
  case GateKind::RZ:
    return "RZ";
  case GateKind::CNOT:
    return "CNOT";
  case GateKind::CRY:
    return "CRY";
  }
  return "?";
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0)
    throw Error(ErrorKind::Index, "negative circuit width");
}

void Circuit::check_qubit(int q) const {
  if (q < 0 || q >= n_qubits_)
    throw Error(ErrorKind::Index, "qubit " + std::to_string(q) +
                                      " outside circuit of width " +
                                      std::to_string(n_qubits_));
}

Circuit &Circuit::add(const Gate &g) {
  check_qubit(g.target);
  const bool needs_control =
      g.kind == GateKind::CNOT || g.kind == GateKind::CRY;
  if (needs_control) {
    check_qubit(g.control);
    if (g.control == g.target)
      throw Error(ErrorKind::Index, "control equals target");
  } else if (g.control != -1) {
    throw Error(ErrorKind::Index, "single-qubit gate given a control");
  }
  gates_.push_back(g);
  return *this;
}

Circuit &Circuit::h(int q) { return add({GateKind::H, q, -1, 0.0}); }
Circuit &Circuit::x(int q) { return add({GateKind::X, q, -1, 0.0}); }
Circuit &Circuit::ry(int q, double a) { return add({GateKind::RY, q, -1, a}); }
Circuit &Circuit::rz(int q, double a) { return add({GateKind::RZ, q, -1, a}); }
Circuit &Circuit::cnot(int c, int t) {
  return add({GateKind::CNOT, t, c, 0.0});
}
Circuit &Circuit::cry(int c, int t, double a) {
  return add({GateKind::CRY, t, c, a});
}

Circuit &Circuit::append(const Circuit &other, std::span<const int> wires) {
  if (!wires.empty() &&
      wires.size() != static_cast<std::size_t>(other.n_qubits()))
    throw Error(ErrorKind::WidthMismatch, "wire map size differs from width");
  if (wires.empty() && other.n_qubits() > n_qubits_)
    throw Error(ErrorKind::WidthMismatch,
                "appended circuit is wider than the target");
  auto map = [&](int q) {
    return wires.empty() ? q : wires[static_cast<std::size_t>(q)];
  };
  gates_.reserve(gates_.size() + other.size());
  for (Gate g : other.gates_) {
    g.target = map(g.target);
    if (g.control >= 0)
      g.control = map(g.control);
    add(g);
  }
  return *this;
}

std::size_t Circuit::count(GateKind kind) const {
  std::size_t n = 0;
  for (const auto &g : gates_)
    n += g.kind == kind;
  return n;
}

std::size_t Circuit::cnot_count() const {
  return count(GateKind::CNOT) + 2 * count(GateKind::CRY);
}

Circuit Circuit::inverse() const {
  Circuit inv(n_qubits_);
  inv.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::RY || g.kind == GateKind::RZ ||
        g.kind == GateKind::CRY)
      g.angle = -g.angle;
    inv.gates_.push_back(g);
  }
  return inv;
}

void write_circuit(std::ostream &out, const Circuit &c) {
  out << "qubits " << c.n_qubits() << "\n";
  for (const auto &g : c.gates()) {
    out << to_string(g.kind);
    if (g.control >= 0)
      out << " " << g.control;
    out << " " << g.target;
    if (g.kind == GateKind::RY || g.kind == GateKind::RZ ||
        g.kind == GateKind::CRY)
      out << " " << g.angle;
    out << "\n";
  }
}

} // namespace walshci
