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

#include "walshci/walsh.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

#include "walshci/error.hpp"

namespace walshci {

OversampledIndices oversample_walsh_indices(std::size_t D, int r,
                                            double factor,
                                            std::uint64_t seed) {
  if (D == 0)
    throw Error(ErrorKind::EmptySpace, "no determinants");
  if (!(factor >= 1.0))
    throw Error(ErrorKind::Config, "oversampling factor must be >= 1");
  if (r <= 0 || r > 62)
    throw Error(ErrorKind::Index, "system width must be in 1..62");
  const double log_d = std::max(1.0, std::log2(static_cast<double>(D)));
  OversampledIndices out;
  out.requested = static_cast<std::size_t>(
      std::ceil(factor * static_cast<double>(D) * log_d - 1e-9));
  const std::uint64_t space = std::uint64_t{1} << r;
  std::size_t m = out.requested;
  if (m > space) {
    m = space;
    out.clamped = true;
  }

  std::mt19937_64 rng(seed);
  std::vector<Bits> sys;
  if (m * 2 >= space) {
    sys.resize(space);
    std::iota(sys.begin(), sys.end(), Bits{0});
    std::shuffle(sys.begin(), sys.end(), rng);
    sys.resize(m);
  } else {
    std::uniform_int_distribution<Bits> pick(0, space - 1);
    std::unordered_set<Bits> seen;
    while (sys.size() < m) {
      const Bits s = pick(rng);
      if (seen.insert(s).second)
        sys.push_back(s);
    }
  }
  std::sort(sys.begin(), sys.end());
  out.indices.reserve(m);
  for (Bits s : sys)
    out.indices.push_back((s << 1) | 1U);
  return out;
}

double default_oversampling_factor(std::string_view system) {
  static const std::map<std::string, double> table = {
      {"h6", 2.0},   {"h8", 2.0},  {"lih", 3.0},
      {"beh2", 2.0}, {"nh3", 4.0}, {"h2o", 14.0}};
  std::string key(system);
  for (char &ch : key)
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  const auto it = table.find(key);
  return it == table.end() ? 2.0 : it->second;
}

Eigen::Index PartialWFT::rank() const {
  if (matrix.size() == 0)
    return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(matrix);
  return qr.rank();
}

PartialWFT make_wft(std::vector<Bits> dets, std::vector<WalshIndex> indices) {
  for (WalshIndex j : indices)
    if ((j & 1U) == 0)
      throw Error(ErrorKind::Convention,
                  "Walsh index " + std::to_string(j) + " lacks the ancilla bit");
  PartialWFT w;
  w.matrix.resize(static_cast<Eigen::Index>(dets.size()),
                  static_cast<Eigen::Index>(indices.size()));
  for (std::size_t k = 0; k < dets.size(); ++k)
    for (std::size_t j = 0; j < indices.size(); ++j)
      w.matrix(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) =
          binary_inner(dets[k], indices[j]) ? -1.0 : 1.0;
  w.dets = std::move(dets);
  w.indices = std::move(indices);
  return w;
}

PartialWFT qr_select(const PartialWFT &wft) {
  const auto D = static_cast<Eigen::Index>(wft.rows());
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(wft.matrix);
  if (qr.rank() < D)
    throw Error(ErrorKind::Rank, "partial Walsh transform has rank " +
                                     std::to_string(qr.rank()) + " < " +
                                     std::to_string(D));
  const auto &perm = qr.colsPermutation().indices();
  std::vector<Eigen::Index> keep(perm.data(), perm.data() + D);
  std::sort(keep.begin(), keep.end());
  std::vector<WalshIndex> idx;
  idx.reserve(keep.size());
  for (Eigen::Index c : keep)
    idx.push_back(wft.indices[static_cast<std::size_t>(c)]);
  return make_wft(wft.dets, std::move(idx));
}

AnsatzParams solve_params(const PartialWFT &wft,
                          const std::vector<double> &targets) {
  if (targets.size() != wft.rows())
    throw Error(ErrorKind::DimensionMismatch,
                "target count does not match determinant count");
  const auto D = static_cast<Eigen::Index>(wft.rows());
  const Eigen::Map<const Eigen::VectorXd> b(targets.data(), D);
  Eigen::VectorXd a;
  if (wft.cols() == wft.rows()) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(wft.matrix);
    if (!lu.isInvertible())
      throw Error(ErrorKind::Solve, "square Walsh transform is singular (rank " +
                                        std::to_string(lu.rank()) + ")");
    a = lu.solve(b);
  } else {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(wft.matrix);
    if (cod.rank() < D)
      throw Error(ErrorKind::Solve, "Walsh transform is rank deficient (rank " +
                                        std::to_string(cod.rank()) + ")");
    a = cod.solve(b);
  }
  const double residual = (wft.matrix * a - b).cwiseAbs().maxCoeff();
  if (!(residual <= 1e-10))
    throw Error(ErrorKind::Solve,
                "Walsh solve residual " + std::to_string(residual));
  return {wft.indices, std::vector<double>(a.data(), a.data() + a.size())};
}

std::vector<double> angles_from_ci(const std::vector<double> &c) {
  double norm2 = 0.0;
  for (double v : c)
    norm2 += v * v;
  if (std::abs(norm2 - 1.0) > 1e-10)
    throw Error(ErrorKind::Domain, "CI vector is not normalized");
  std::vector<double> theta;
  theta.reserve(c.size());
  for (double v : c) {
    if (std::abs(v) > 1.0 + 1e-12)
      throw Error(ErrorKind::Domain, "CI coefficient outside [-1, 1]");
    theta.push_back(std::acos(std::clamp(v, -1.0, 1.0)));
  }
  return theta;
}

double walsh_phase(const AnsatzParams &params, Bits k) {
  double f = 0.0;
  for (std::size_t j = 0; j < params.size(); ++j)
    f += binary_inner(k, params.indices[j]) ? -params.angles[j]
                                            : params.angles[j];
  return f;
}

std::vector<double> predicted_amplitudes(const AnsatzParams &params,
                                         const std::vector<Bits> &dets) {
  std::vector<double> v;
  v.reserve(dets.size());
  double norm2 = 0.0;
  for (Bits k : dets) {
    v.push_back(std::cos(walsh_phase(params, k)));
    norm2 += v.back() * v.back();
  }
  if (!(norm2 > 1e-28))
    throw Error(ErrorKind::DegenerateState, "all ansatz amplitudes vanish");
  const double s = 1.0 / std::sqrt(norm2);
  for (double &x : v)
    x *= s;
  return v;
}

Eigen::VectorXd predicted_amplitudes(const PartialWFT &wft,
                                     const Eigen::VectorXd &angles) {
  Eigen::VectorXd v = (wft.matrix * angles).array().cos().matrix();
  const double norm2 = v.squaredNorm();
  if (!(norm2 > 1e-28))
    throw Error(ErrorKind::DegenerateState, "all ansatz amplitudes vanish");
  return v / std::sqrt(norm2);
}

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::remainder(a, two_pi);
  if (w <= -std::numbers::pi)
    w += two_pi;
  return w;
}

namespace {

// Wire mask for the system part of a Walsh index (ancilla excluded).
Bits support_wires(WalshIndex j) { return system_bits(j); }

void check_terms(const AnsatzParams &params, int n_qubits) {
  if (params.indices.size() != params.angles.size())
    throw Error(ErrorKind::DimensionMismatch, "index/angle count mismatch");
  if (n_qubits < 1 || n_qubits > 63)
    throw Error(ErrorKind::Index, "invalid dilated width");
  for (WalshIndex j : params.indices) {
    if ((j & 1U) == 0)
      throw Error(ErrorKind::Convention, "even Walsh index " +
                                             std::to_string(j) +
                                             " in ansatz");
    if (system_bits(j) >> (n_qubits - 1))
      throw Error(ErrorKind::Index,
                  "Walsh index " + std::to_string(j) + " exceeds width");
  }
}

void toggle_fold(Circuit &c, Bits wires, int ancilla) {
  for (int q = 0; wires; ++q, wires >>= 1)
    if (wires & 1U)
      c.cnot(q, ancilla);
}

Bits gray_rank(Bits g) {
  Bits b = g;
  for (int shift = 1; shift < 64; shift <<= 1)
    b ^= b >> shift;
  return b;
}

} // namespace

Circuit naive_diagonal_circuit(const AnsatzParams &params, int n_qubits) {
  check_terms(params, n_qubits);
  const int anc = n_qubits - 1;
  Circuit c(n_qubits);
  for (std::size_t t = 0; t < params.size(); ++t) {
    const Bits w = support_wires(params.indices[t]);
    toggle_fold(c, w, anc);
    c.rz(anc, -2.0 * wrap_angle(params.angles[t]));
    toggle_fold(c, w, anc);
  }
  return c;
}

Circuit diagonal_circuit(const AnsatzParams &params, int n_qubits) {
  check_terms(params, n_qubits);
  const int anc = n_qubits - 1;
  std::vector<std::size_t> order(params.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return gray_rank(support_wires(params.indices[a])) <
           gray_rank(support_wires(params.indices[b]));
  });
  // Every fold targets the ancilla, so the folds commute and the open set of
  // CNOTs between consecutive terms is the symmetric difference.
  Circuit c(n_qubits);
  Bits open = 0;
  for (std::size_t t : order) {
    const Bits w = support_wires(params.indices[t]);
    toggle_fold(c, open ^ w, anc);
    open = w;
    c.rz(anc, -2.0 * wrap_angle(params.angles[t]));
  }
  toggle_fold(c, open, anc);
  return c;
}

Circuit dilated_ansatz_circuit(const AnsatzParams &params,
                               const Circuit &subspace_circuit) {
  const int r = subspace_circuit.n_qubits();
  Circuit c(r + 1);
  c.append(subspace_circuit);
  c.h(r);
  c.append(diagonal_circuit(params, r + 1));
  c.h(r);
  return c;
}

} // namespace walshci
