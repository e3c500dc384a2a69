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

#include "walshci/hamiltonian.hpp"

#include <cmath>
#include <vector>

#include "walshci/error.hpp"

namespace walshci {

QubitOperator jw_ladder(int p, bool dagger, int n_qubits) {
  if (p < 0 || p >= n_qubits)
    throw Error(ErrorKind::Index, "ladder index " + std::to_string(p) +
                                      " outside register of " +
                                      std::to_string(n_qubits) + " qubits");
  const Bits site = Bits{1} << p;
  const Bits chain = site - 1;
  QubitOperator op(n_qubits);
  op.add(site, chain, 0.5);
  op.add(site, chain | site, cplx{0.0, dagger ? -0.5 : 0.5});
  return op;
}

QubitOperator number_operator(int n_qubits) {
  QubitOperator n(n_qubits);
  for (int q = 0; q < n_qubits; ++q) {
    n.add(0, 0, 0.5);
    n.add(0, Bits{1} << q, -0.5);
  }
  n.prune();
  return n;
}

QubitOperator build_hamiltonian(const FcidumpData &data,
                                SpinOrdering ordering) {
  (void)ordering; // only the interleaved layout exists
  const int norb = data.n_orb;
  const int nq = 2 * norb;
  if (nq > 64)
    throw Error(ErrorKind::Index, "too many spin orbitals for 64-bit masks");
  auto so = [](int spatial, int spin) { return 2 * spatial + spin; };

  // E[P][Q] = a+_P a_Q for every spin-orbital pair.
  std::vector<QubitOperator> create, annihilate;
  for (int p = 0; p < nq; ++p) {
    create.push_back(jw_ladder(p, true, nq));
    annihilate.push_back(jw_ladder(p, false, nq));
  }
  std::vector<QubitOperator> excitation(static_cast<std::size_t>(nq * nq));
  for (int p = 0; p < nq; ++p)
    for (int q = 0; q < nq; ++q) {
      auto e = create[static_cast<std::size_t>(p)] *
               annihilate[static_cast<std::size_t>(q)];
      e.prune(1e-15);
      excitation[static_cast<std::size_t>(p * nq + q)] = std::move(e);
    }
  auto E = [&](int p, int q) -> const QubitOperator & {
    return excitation[static_cast<std::size_t>(p * nq + q)];
  };

  QubitOperator h = QubitOperator::identity(nq, data.e_core);
  for (int p = 0; p < norb; ++p)
    for (int q = 0; q < norb; ++q) {
      const double v = data.one_body(p, q);
      if (v == 0.0)
        continue;
      for (int s = 0; s < 2; ++s)
        h += E(so(p, s), so(q, s)) * cplx{v, 0.0};
    }

  // a+_P a+_R a_S a_Q = E_PQ E_RS - delta_QR E_PS
  for (int p = 0; p < norb; ++p)
    for (int q = 0; q < norb; ++q)
      for (int r = 0; r < norb; ++r)
        for (int s = 0; s < norb; ++s) {
          const double v = 0.5 * data.two_body(p, q, r, s);
          if (v == 0.0)
            continue;
          for (int sig = 0; sig < 2; ++sig)
            for (int tau = 0; tau < 2; ++tau) {
              const int P = so(p, sig), Q = so(q, sig);
              const int R = so(r, tau), S = so(s, tau);
              if (P == R || Q == S)
                continue; // a+_P a+_P = 0
              QubitOperator term = E(P, Q) * E(R, S);
              if (Q == R)
                term += E(P, S) * cplx{-1.0, 0.0};
              h += term * cplx{v, 0.0};
            }
        }

  h.prune();
  if (!h.is_hermitian(1e-10))
    throw Error(ErrorKind::Consistency,
                "assembled Hamiltonian has imaginary coefficients (max " +
                    std::to_string(h.max_imaginary()) + ")");
  QubitOperator real_h(nq);
  for (const auto &[key, c] : h.terms())
    real_h.add(key.first, key.second, c.real());
  real_h.prune();
  return real_h;
}

} // namespace walshci
