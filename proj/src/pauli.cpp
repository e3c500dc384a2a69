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

#include "walshci/pauli.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "walshci/error.hpp"

namespace walshci {

namespace {

// i^k for k mod 4.
cplx ipow(int k) {
  switch (((k % 4) + 4) % 4) {
  case 0:
    return {1.0, 0.0};
  case 1:
    return {0.0, 1.0};
  case 2:
    return {-1.0, 0.0};
  default:
    return {0.0, -1.0};
  }
}

} // namespace

char PauliTerm::letter(int qubit) const {
  const bool xb = (x >> qubit) & 1U;
  const bool zb = (z >> qubit) & 1U;
  if (xb && zb)
    return 'Y';
  if (xb)
    return 'X';
  if (zb)
    return 'Z';
  return 'I';
}

std::string PauliTerm::letters(int n_qubits) const {
  std::string s(static_cast<std::size_t>(n_qubits), 'I');
  for (int q = 0; q < n_qubits; ++q)
    s[static_cast<std::size_t>(q)] = letter(q);
  return s;
}

// Letters L = i^{|x&z|} X^x Z^z. Moving Z^{z1} past X^{x2} costs
// (-1)^{|z1&x2|}.
PauliTerm multiply_terms(const PauliTerm &a, const PauliTerm &b) {
  PauliTerm out;
  out.x = a.x ^ b.x;
  out.z = a.z ^ b.z;
  const int k = popcount(a.x & a.z) + popcount(b.x & b.z) +
                2 * popcount(a.z & b.x) - popcount(out.x & out.z);
  out.coefficient = a.coefficient * b.coefficient * ipow(k);
  return out;
}

cplx pauli_phase(Bits x, Bits z, Bits ket) {
  return ipow(popcount(x & z) + 2 * popcount(z & ket));
}

QubitOperator::QubitOperator(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > 64)
    throw Error(ErrorKind::Index, "qubit count must be in [0, 64]");
}

QubitOperator QubitOperator::identity(int n_qubits, cplx coefficient) {
  QubitOperator op(n_qubits);
  op.add(0, 0, coefficient);
  return op;
}

QubitOperator QubitOperator::single(int n_qubits, const PauliTerm &term) {
  QubitOperator op(n_qubits);
  op.add(term);
  return op;
}

cplx QubitOperator::coefficient(Bits x, Bits z) const {
  auto it = terms_.find({x, z});
  return it == terms_.end() ? cplx{} : it->second;
}

void QubitOperator::add(const PauliTerm &term) {
  add(term.x, term.z, term.coefficient);
}

void QubitOperator::add(Bits x, Bits z, cplx coefficient) {
  if (n_qubits_ < 64) {
    const Bits mask = (Bits{1} << n_qubits_) - 1;
    if ((x | z) & ~mask)
      throw Error(ErrorKind::Index, "Pauli term acts outside the register");
  }
  terms_[{x, z}] += coefficient;
}

QubitOperator &QubitOperator::operator+=(const QubitOperator &other) {
  if (other.n_qubits_ > n_qubits_)
    n_qubits_ = other.n_qubits_;
  for (const auto &[key, c] : other.terms_)
    terms_[key] += c;
  return *this;
}

QubitOperator &QubitOperator::operator*=(cplx scalar) {
  for (auto &[key, c] : terms_)
    c *= scalar;
  return *this;
}

QubitOperator operator*(const QubitOperator &a, const QubitOperator &b) {
  QubitOperator out(std::max(a.n_qubits_, b.n_qubits_));
  for (const auto &[ka, ca] : a.terms_) {
    const PauliTerm ta{ka.first, ka.second, ca};
    for (const auto &[kb, cb] : b.terms_) {
      const PauliTerm p = multiply_terms(ta, {kb.first, kb.second, cb});
      out.terms_[{p.x, p.z}] += p.coefficient;
    }
  }
  return out;
}

void QubitOperator::prune(double tol) {
  std::erase_if(terms_,
                [tol](const auto &kv) { return std::abs(kv.second) < tol; });
}

double QubitOperator::max_imaginary() const {
  double m = 0.0;
  for (const auto &[key, c] : terms_)
    m = std::max(m, std::abs(c.imag()));
  return m;
}

double QubitOperator::one_norm() const {
  double s = 0.0;
  for (const auto &[key, c] : terms_)
    s += std::abs(c);
  return s;
}

std::string QubitOperator::to_string() const {
  std::ostringstream os;
  for (const auto &[key, c] : terms_) {
    const PauliTerm t{key.first, key.second, c};
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag())
       << "i) " << t.letters(n_qubits_) << "\n";
  }
  return os.str();
}

QubitOperator commutator(const QubitOperator &a, const QubitOperator &b) {
  QubitOperator c = a * b;
  c += (b * a) * cplx{-1.0, 0.0};
  c.prune();
  return c;
}

cplx matrix_element(const QubitOperator &op, Bits bra, Bits ket) {
  cplx sum{};
  const Bits flip = bra ^ ket;
  // Terms are keyed by x first, so all contributing terms are contiguous.
  auto it = op.terms().lower_bound({flip, 0});
  for (; it != op.terms().end() && it->first.first == flip; ++it)
    sum += it->second * pauli_phase(flip, it->first.second, ket);
  return sum;
}

void write_operator(std::ostream &out, const QubitOperator &op) {
  out << "qubits " << op.n_qubits() << "\n";
  char buf[128];
  for (const auto &[key, c] : op.terms()) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %llx %llx\n", c.real(),
                  c.imag(), static_cast<unsigned long long>(key.first),
                  static_cast<unsigned long long>(key.second));
    out << buf;
  }
}

QubitOperator read_operator(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;
  int n = -1;
  QubitOperator op(0);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string tag;
      if (!(ls >> tag >> n) || tag != "qubits" || n < 0 || n > 64)
        throw ParseError(lineno, "expected 'qubits N' header");
      op = QubitOperator(n);
      continue;
    }
    double re = 0, im = 0;
    std::string xs, zs;
    if (!(ls >> re >> im >> xs >> zs))
      throw ParseError(lineno, "expected 're im x_hex z_hex'");
    try {
      op.add(std::stoull(xs, nullptr, 16), std::stoull(zs, nullptr, 16),
             {re, im});
    } catch (const std::logic_error &) {
      throw ParseError(lineno, "bad hexadecimal mask");
    }
  }
  if (n < 0)
    throw ParseError(lineno, "missing 'qubits N' header");
  return op;
}

} // namespace walshci
