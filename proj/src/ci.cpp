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

#include "walshci/ci.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "walshci/error.hpp"
#include "walshci/subspace.hpp"

namespace walshci {

void CiVector::validate() const {
  if (dets.size() != coeffs.size())
    throw Error(ErrorKind::Consistency, "CI vector dets/coeffs size mismatch");
  if (dets.empty())
    throw Error(ErrorKind::EmptySpace, "CI vector is empty");
  for (std::size_t i = 1; i < dets.size(); ++i)
    if (dets[i - 1] >= dets[i])
      throw Error(ErrorKind::Consistency,
                  "CI vector dets must be strictly ascending");
  double norm2 = 0.0;
  for (double c : coeffs)
    norm2 += c * c;
  if (std::abs(norm2 - 1.0) > 1e-10)
    throw Error(ErrorKind::Consistency, "CI vector is not normalized");
}

double CiVector::coefficient(Bits det) const {
  const auto it = std::lower_bound(dets.begin(), dets.end(), det);
  if (it == dets.end() || *it != det)
    return 0.0;
  return coeffs[static_cast<std::size_t>(it - dets.begin())];
}

Eigen::MatrixXd subspace_hamiltonian(const QubitOperator &op,
                                     const std::vector<Bits> &dets) {
  if (dets.empty())
    throw Error(ErrorKind::EmptySpace, "no determinants");
  struct ZTerm {
    Bits z;
    cplx c;
  };
  std::unordered_map<Bits, std::vector<ZTerm>> by_flip;
  for (const auto &[key, c] : op.terms())
    by_flip[key.first].push_back({key.second, c});

  const auto D = static_cast<Eigen::Index>(dets.size());
  Eigen::MatrixXd h(D, D);
  double max_asym = 0.0;
  for (Eigen::Index k = 0; k < D; ++k) {
    for (Eigen::Index l = 0; l <= k; ++l) {
      const Bits bra = dets[static_cast<std::size_t>(k)];
      const Bits ket = dets[static_cast<std::size_t>(l)];
      const auto it = by_flip.find(bra ^ ket);
      cplx upper{0.0}, lower{0.0};
      if (it != by_flip.end()) {
        for (const ZTerm &t : it->second) {
          lower += t.c * pauli_phase(bra ^ ket, t.z, ket);
          upper += t.c * pauli_phase(bra ^ ket, t.z, bra);
        }
      }
      max_asym = std::max({max_asym, std::abs(lower - std::conj(upper)),
                           std::abs(lower.imag())});
      h(k, l) = lower.real();
      h(l, k) = upper.real();
    }
  }
  if (max_asym > 1e-10)
    throw Error(ErrorKind::Consistency,
                "subspace matrix is not real symmetric (deviation " +
                    std::to_string(max_asym) + ")");
  return h;
}

Eigensystem diagonalize_subspace(const Eigen::MatrixXd &h) {
  if (h.rows() != h.cols() || h.rows() == 0)
    throw Error(ErrorKind::DimensionMismatch, "matrix must be square, nonempty");
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw Error(ErrorKind::Consistency, "matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success)
    throw Error(ErrorKind::Consistency, "eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

GroundState ground_state(const Eigen::MatrixXd &h,
                         const std::vector<Bits> &dets) {
  if (static_cast<std::size_t>(h.rows()) != dets.size())
    throw Error(ErrorKind::DimensionMismatch, "matrix/determinant size mismatch");
  const Eigensystem es = diagonalize_subspace(h);
  Eigen::VectorXd v = es.vectors.col(0);
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  if (v(imax) < 0)
    v = -v;
  GroundState g;
  g.energy = es.values(0);
  g.vector.dets = dets;
  g.vector.coeffs.assign(v.data(), v.data() + v.size());
  return g;
}

GroundState ground_state(const QubitOperator &op,
                         const std::vector<Bits> &dets) {
  return ground_state(subspace_hamiltonian(op, dets), dets);
}

std::vector<Bits> sci_select(const CiVector &reference, double epsilon, int r,
                             int n_elec, int sz2) {
  if (!(epsilon > 0.0))
    throw Error(ErrorKind::Config, "threshold must be positive");
  if (r <= 0 || r > 63)
    throw Error(ErrorKind::Index, "qubit count must be in 1..63");
  std::vector<Bits> retained;
  for (std::size_t i = 0; i < reference.size(); ++i)
    if (std::abs(reference.coeffs[i]) > epsilon)
      retained.push_back(reference.dets[i]);
  if (retained.empty())
    throw Error(ErrorKind::ThresholdTooHigh,
                "no coefficient exceeds the threshold");

  const Bits full = (Bits{1} << r) - 1;
  auto in_sector = [&](Bits b) {
    return popcount(b) == n_elec && sz2_of(b) == sz2;
  };
  std::unordered_set<Bits> out;
  for (Bits det : retained) {
    if (det & ~full)
      throw Error(ErrorKind::Index, "reference determinant wider than r");
    if (in_sector(det))
      out.insert(det);
    std::vector<int> occ, vir;
    for (int q = 0; q < r; ++q)
      ((det >> q) & 1U ? occ : vir).push_back(q);
    for (std::size_t i = 0; i < occ.size(); ++i) {
      for (std::size_t a = 0; a < vir.size(); ++a) {
        const Bits s = det ^ (Bits{1} << occ[i]) ^ (Bits{1} << vir[a]);
        if (in_sector(s))
          out.insert(s);
        for (std::size_t j = i + 1; j < occ.size(); ++j)
          for (std::size_t b = a + 1; b < vir.size(); ++b) {
            const Bits d = s ^ (Bits{1} << occ[j]) ^ (Bits{1} << vir[b]);
            if (in_sector(d))
              out.insert(d);
          }
      }
    }
  }
  std::vector<Bits> dets(out.begin(), out.end());
  std::sort(dets.begin(), dets.end());
  return dets;
}

Comparison energy_and_fidelity(const CiVector &state, const CiVector &oracle,
                               const Eigen::MatrixXd &h, double oracle_energy) {
  const auto D = static_cast<Eigen::Index>(oracle.size());
  if (h.rows() != D || h.cols() != D || oracle.coeffs.size() != oracle.dets.size())
    throw Error(ErrorKind::DimensionMismatch,
                "oracle matrix does not match oracle determinants");
  Eigen::VectorXd s = Eigen::VectorXd::Zero(D);
  for (std::size_t i = 0; i < state.size(); ++i) {
    const auto it =
        std::lower_bound(oracle.dets.begin(), oracle.dets.end(), state.dets[i]);
    if (it == oracle.dets.end() || *it != state.dets[i])
      throw Error(ErrorKind::DimensionMismatch,
                  "state determinant outside the oracle space");
    s(it - oracle.dets.begin()) = state.coeffs[i];
  }
  const double n2 = s.squaredNorm();
  if (!(n2 > 0.0))
    throw Error(ErrorKind::DegenerateState, "state vector is zero");
  const Eigen::Map<const Eigen::VectorXd> o(oracle.coeffs.data(), D);
  Comparison c;
  c.energy = s.dot(h * s) / n2;
  c.energy_error = c.energy - oracle_energy;
  const double ov = s.dot(o);
  c.fidelity = ov * ov / (n2 * o.squaredNorm());
  return c;
}

} // namespace walshci
