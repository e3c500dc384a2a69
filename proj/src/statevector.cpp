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

#include "walshci/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "walshci/error.hpp"

namespace walshci {

namespace {

void check_width(int n) {
  if (n < 0 || n > Statevector::kMaxQubits)
    throw Error(ErrorKind::Index,
                "statevector width " + std::to_string(n) + " outside [0, " +
                    std::to_string(Statevector::kMaxQubits) + "]");
}

// Calls f(i0, i1) for every index pair differing only in bit `t`, with
// bit t of i0 clear.
template <class F> void for_each_pair(std::size_t dim, int t, F &&f) {
  const std::size_t bit = std::size_t{1} << t;
  const std::size_t low = bit - 1;
  for (std::size_t k = 0; k < dim / 2; ++k) {
    const std::size_t i0 = ((k & ~low) << 1) | (k & low);
    f(i0, i0 | bit);
  }
}

} // namespace

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
  check_width(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, cplx{});
  amps_[0] = 1.0;
}

Statevector Statevector::basis(int n_qubits, Bits index) {
  Statevector s(n_qubits);
  if (index >= s.dimension())
    throw Error(ErrorKind::Index, "basis index outside the register");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

Statevector Statevector::from_amplitudes(std::vector<cplx> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim == 0 || (dim & (dim - 1)) != 0)
    throw Error(ErrorKind::DimensionMismatch,
                "amplitude count is not a power of two");
  Statevector s(0);
  s.n_qubits_ = __builtin_ctzll(dim);
  check_width(s.n_qubits_);
  s.amps_ = std::move(amplitudes);
  return s;
}

double Statevector::norm_squared() const {
  double s = 0.0;
  for (const auto &a : amps_)
    s += std::norm(a);
  return s;
}

void Statevector::apply(const Gate &g) {
  if (g.target >= n_qubits_ || g.control >= n_qubits_)
    throw Error(ErrorKind::WidthMismatch, "gate acts outside the state");
  const std::size_t dim = amps_.size();
  auto &a = amps_;
  switch (g.kind) {
  case GateKind::H: {
    const double r = 1.0 / std::sqrt(2.0);
    for_each_pair(dim, g.target, [&](std::size_t i, std::size_t j) {
      const cplx u = a[i], v = a[j];
      a[i] = (u + v) * r;
      a[j] = (u - v) * r;
    });
    break;
  }
  case GateKind::X:
    for_each_pair(dim, g.target,
                  [&](std::size_t i, std::size_t j) { std::swap(a[i], a[j]); });
    break;
  case GateKind::RY: {
    const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
    for_each_pair(dim, g.target, [&](std::size_t i, std::size_t j) {
      const cplx u = a[i], v = a[j];
      a[i] = c * u - s * v;
      a[j] = s * u + c * v;
    });
    break;
  }
  case GateKind::RZ: {
    const cplx p0 = std::polar(1.0, -g.angle / 2);
    const cplx p1 = std::polar(1.0, g.angle / 2);
    for_each_pair(dim, g.target, [&](std::size_t i, std::size_t j) {
      a[i] *= p0;
      a[j] *= p1;
    });
    break;
  }
  case GateKind::CNOT: {
    const std::size_t cbit = std::size_t{1} << g.control;
    for_each_pair(dim, g.target, [&](std::size_t i, std::size_t j) {
      if (i & cbit)
        std::swap(a[i], a[j]);
    });
    break;
  }
  case GateKind::CRY: {
    const std::size_t cbit = std::size_t{1} << g.control;
    const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
    for_each_pair(dim, g.target, [&](std::size_t i, std::size_t j) {
      if (!(i & cbit))
        return;
      const cplx u = a[i], v = a[j];
      a[i] = c * u - s * v;
      a[j] = s * u + c * v;
    });
    break;
  }
  }
}

void Statevector::apply(const Circuit &c) {
  if (c.n_qubits() != n_qubits_)
    throw Error(ErrorKind::WidthMismatch,
                "circuit width " + std::to_string(c.n_qubits()) +
                    " differs from state width " + std::to_string(n_qubits_));
  for (const auto &g : c.gates())
    apply(g);
}

Statevector Statevector::extended(int extra) const {
  check_width(n_qubits_ + extra);
  Statevector s(n_qubits_ + extra);
  std::copy(amps_.begin(), amps_.end(), s.amps_.begin());
  return s;
}

Statevector apply_circuit(Statevector state, const Circuit &circuit) {
  state.apply(circuit);
  return state;
}

double expectation(const Statevector &state, const QubitOperator &op) {
  if (op.n_qubits() > state.n_qubits())
    throw Error(ErrorKind::WidthMismatch, "operator wider than the state");
  const auto &a = state.amplitudes();
  cplx total{};
  for (const auto &[key, c] : op.terms()) {
    const auto [x, z] = key;
    cplx acc{};
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == cplx{})
        continue;
      acc += std::conj(a[k ^ x]) * a[k] * pauli_phase(x, z, k);
    }
    total += c * acc;
  }
  if (std::abs(total.imag()) > 1e-10)
    throw Error(ErrorKind::Hermiticity,
                "expectation has imaginary part " +
                    std::to_string(total.imag()));
  return total.real();
}

double outcome_probability(const Statevector &state, int qubit, int outcome) {
  if (qubit < 0 || qubit >= state.n_qubits())
    throw Error(ErrorKind::Index, "projected qubit outside the state");
  const std::size_t bit = std::size_t{1} << qubit;
  double p = 0.0;
  for (std::size_t k = 0; k < state.dimension(); ++k)
    if (((k & bit) != 0) == (outcome != 0))
      p += std::norm(state[k]);
  return p;
}

Projection project_qubit(const Statevector &state, int qubit, int outcome) {
  if (outcome != 0 && outcome != 1)
    throw Error(ErrorKind::Index, "outcome must be 0 or 1");
  const double p = outcome_probability(state, qubit, outcome);
  if (p < 1e-14)
    throw Error(ErrorKind::ImpossibleOutcome,
                "qubit " + std::to_string(qubit) + " outcome " +
                    std::to_string(outcome) + " has probability " +
                    std::to_string(p));
  Projection out{state, p};
  const std::size_t bit = std::size_t{1} << qubit;
  const double scale = 1.0 / std::sqrt(p);
  for (std::size_t k = 0; k < state.dimension(); ++k) {
    if (((k & bit) != 0) == (outcome != 0))
      out.state[k] *= scale;
    else
      out.state[k] = 0.0;
  }
  return out;
}

std::map<Bits, std::uint64_t> sample(const Statevector &state,
                                     std::uint64_t shots, std::uint64_t seed) {
  std::vector<double> cdf(state.dimension());
  double acc = 0.0;
  for (std::size_t k = 0; k < cdf.size(); ++k) {
    acc += std::norm(state[k]);
    cdf[k] = acc;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, acc);
  std::map<Bits, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = uni(rng);
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    // upper_bound skips zero-probability entries since their cdf is flat.
    std::size_t k = static_cast<std::size_t>(it - cdf.begin());
    if (k >= cdf.size())
      k = cdf.size() - 1;
    ++counts[k];
  }
  return counts;
}

double fidelity(const Statevector &a, const Statevector &b) {
  if (a.n_qubits() != b.n_qubits())
    throw Error(ErrorKind::WidthMismatch, "fidelity of states of different width");
  cplx ov{};
  for (std::size_t k = 0; k < a.dimension(); ++k)
    ov += std::conj(a[k]) * b[k];
  return std::norm(ov);
}

void write_statevector(std::ostream &out, const Statevector &s,
                       double threshold) {
  char buf[96];
  for (std::size_t k = 0; k < s.dimension(); ++k) {
    if (std::abs(s[k]) <= threshold && threshold > 0.0)
      continue;
    std::snprintf(buf, sizeof buf, "%zu %.17g %.17g\n", k, s[k].real(),
                  s[k].imag());
    out << buf;
  }
}

} // namespace walshci
