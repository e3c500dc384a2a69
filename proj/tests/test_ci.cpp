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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "support/oracles.hpp"
#include "walshci/ci.hpp"
#include "walshci/error.hpp"
#include "walshci/fcidump.hpp"
#include "walshci/hamiltonian.hpp"
#include "walshci/serialize.hpp"
#include "walshci/subspace.hpp"

using namespace walshci;
using Catch::Matchers::WithinAbs;

namespace {

struct System {
  FcidumpData data;
  QubitOperator h;
  std::vector<Bits> sector;
  int r;
};

System load(const std::string &name) {
  System s{load_fcidump(oracle::data_path("fixtures/" + name)), QubitOperator(), {}, 0};
  s.h = build_hamiltonian(s.data);
  s.r = 2 * s.data.n_orb;
  s.sector = enumerate_determinants(
      {s.r, Symmetry::SpinAndNumber, s.data.n_elec, s.data.ms2, {}});
  return s;
}

const System &h2o() {
  static const System s = load("h2o_sto6g_0.960.fcidump");
  return s;
}

double rhf_energy(const std::string &name) {
  std::ifstream in(oracle::data_path("fixtures/reference_energies.json"));
  return nlohmann::json::parse(in).at(name).at("rhf").get<double>();
}

// Sector determinants within two electron moves of any retained one.
std::vector<Bits> excitation_oracle(const CiVector &ref, double eps, int r,
                                    int n, int sz2) {
  std::vector<Bits> out;
  for (Bits d : oracle::brute_force_sector(r, n, sz2))
    for (std::size_t i = 0; i < ref.size(); ++i)
      if (std::abs(ref.coeffs[i]) > eps && popcount(d ^ ref.dets[i]) <= 4) {
        out.push_back(d);
        break;
      }
  return out;
}

double ground_energy(const QubitOperator &h, const std::vector<Bits> &dets) {
  return diagonalize_subspace(subspace_hamiltonian(h, dets)).values(0);
}

} // namespace

TEST_CASE("single determinant matrix is its diagonal element", "[ci]") {
  const System s = load("h2_sto6g_0.740.fcidump");
  for (Bits d : s.sector) {
    const Eigen::MatrixXd m = subspace_hamiltonian(s.h, {d});
    REQUIRE(m.rows() == 1);
    CHECK_THAT(m(0, 0), WithinAbs(matrix_element(s.h, d, d).real(), 1e-14));
  }
}

TEST_CASE("H2 two-determinant matrix brackets the Hartree-Fock energy", "[ci]") {
  for (const std::string &name : oracle::h2_fixtures()) {
    const System s = load(name);
    const Eigen::MatrixXd m = subspace_hamiltonian(s.h, {3, 12});
    const Eigensystem e = diagonalize_subspace(m);
    const double hf = m(0, 0);
    CHECK_THAT(hf, WithinAbs(rhf_energy(name), 1e-8));
    CHECK(e.values(0) <= hf);
    CHECK(e.values(1) >= hf);
    const Eigen::MatrixXcd full = oracle::operator_matrix(s.h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(full);
    // The full-space minimum lies in the 2-electron sector for H2.
    CHECK_THAT(e.values(0), WithinAbs(es.eigenvalues()(0), 1e-10));
    CHECK_THAT(e.values(0), WithinAbs(oracle::pyscf_fci_energy(name), 1e-8));
  }
}

TEST_CASE("all-determinant matrix equals the dense operator", "[ci]") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 10; ++trial) {
    // Real coefficients on strings with an even number of Y letters give a
    // real symmetric matrix.
    QubitOperator op(3);
    for (Bits x = 0; x < 8; ++x)
      for (Bits z = 0; z < 8; ++z)
        if (popcount(x & z) % 2 == 0 && u(rng) > 0.3)
          op.add(x, z, u(rng));
    const Eigen::MatrixXcd dense = oracle::operator_matrix(op);
    const Eigen::MatrixXd m = subspace_hamiltonian(op, {0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(dense.imag().cwiseAbs().maxCoeff() < 1e-14);
    CHECK((dense.real() - m).cwiseAbs().maxCoeff() < 1e-12);
  }
  QubitOperator skew(1);
  skew.add(1, 1, cplx(0, 1)); // i Y is real antisymmetric
  CHECK_THROWS_AS(subspace_hamiltonian(skew, {0, 1}), Error);
}

TEST_CASE("diagonalize examples", "[ci]") {
  const Eigensystem e = diagonalize_subspace(Eigen::Vector3d(3, 1, 2).asDiagonal());
  CHECK_THAT(e.values(0), WithinAbs(1, 1e-14));
  CHECK_THAT(e.values(1), WithinAbs(2, 1e-14));
  CHECK_THAT(e.values(2), WithinAbs(3, 1e-14));
  const double a = 0.7, b = -0.2;
  Eigen::Matrix2d m;
  m << a, b, b, a;
  const Eigensystem f = diagonalize_subspace(m);
  CHECK_THAT(f.values(0), WithinAbs(a - std::abs(b), 1e-14));
  CHECK_THAT(f.values(1), WithinAbs(a + std::abs(b), 1e-14));
  Eigen::Matrix2d bad;
  bad << 1, 2, 3, 4;
  try {
    (void)diagonalize_subspace(bad);
    FAIL("expected a consistency error");
  } catch (const Error &e2) {
    CHECK(e2.kind() == ErrorKind::Consistency);
  }
}

TEST_CASE("H2O full-sector eigenpairs", "[ci][h2o]") {
  const System &s = h2o();
  REQUIRE(s.sector.size() == 441);
  const Eigen::MatrixXd m = subspace_hamiltonian(s.h, s.sector);
  const Eigensystem e = diagonalize_subspace(m);
  const double hn = m.norm();
  for (Eigen::Index k = 0; k < e.values.size(); ++k)
    REQUIRE((m * e.vectors.col(k) - e.values(k) * e.vectors.col(k)).norm() <= 1e-9 * hn);
  const Eigen::MatrixXd gram = e.vectors.transpose() * e.vectors;
  CHECK((gram - Eigen::MatrixXd::Identity(441, 441)).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK_THAT(e.values(0), WithinAbs(oracle::pyscf_fci_energy("h2o_sto6g_0.960.fcidump"), 1e-8));

  // Reordering the determinants leaves the spectrum unchanged.
  std::vector<Bits> shuffled = s.sector;
  std::shuffle(shuffled.begin(), shuffled.end(), std::mt19937_64(2));
  const Eigensystem p = diagonalize_subspace(subspace_hamiltonian(s.h, shuffled));
  CHECK((p.values - e.values).cwiseAbs().maxCoeff() <= 1e-10);

  const GroundState g = ground_state(m, s.sector);
  CHECK_NOTHROW(g.vector.validate());
  CHECK(g.energy == e.values(0));
  const auto big = std::max_element(g.vector.coeffs.begin(), g.vector.coeffs.end(),
                                    [](double x, double y) { return std::abs(x) < std::abs(y); });
  CHECK(*big > 0);
}

TEST_CASE("sci_select examples", "[ci][sci]") {
  CiVector hf{{3}, {1.0}};
  CHECK(sci_select(hf, 0.5, 4, 2, 0) == std::vector<Bits>{3, 6, 9, 12});
  try {
    (void)sci_select(CiVector{{3, 12}, {0.8, -0.6}}, 0.9, 4, 2, 0);
    FAIL("expected threshold-too-high");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::ThresholdTooHigh);
  }
  // Ties are dropped.
  CHECK_THROWS_AS(sci_select(CiVector{{3}, {1.0}}, 1.0, 4, 2, 0), Error);
  CHECK_THROWS_AS(sci_select(hf, 0.0, 4, 2, 0), Error);
}

TEST_CASE("sci_select matches brute-force excitation enumeration",
          "[ci][sci][h2o]") {
  const System &s = h2o();
  const GroundState g = ground_state(s.h, s.sector);
  for (double eps : {0.3, 0.05, 1e-2, 1e-3}) {
    const auto got = sci_select(g.vector, eps, s.r, s.data.n_elec, s.data.ms2);
    CHECK(got == excitation_oracle(g.vector, eps, s.r, s.data.n_elec, s.data.ms2));
  }
}

TEST_CASE("sci_select ignores reference storage order", "[ci][sci][invariant]") {
  const System &s = h2o();
  const GroundState g = ground_state(s.h, s.sector);
  std::vector<std::size_t> perm(g.vector.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(6));
  CiVector shuffled;
  for (std::size_t i : perm) {
    shuffled.dets.push_back(g.vector.dets[i]);
    shuffled.coeffs.push_back(g.vector.coeffs[i]);
  }
  for (double eps : {0.1, 1e-2, 1e-4})
    CHECK(sci_select(shuffled, eps, s.r, 10, 0) == sci_select(g.vector, eps, s.r, 10, 0));
}

TEST_CASE("nested selections lower the energy monotonically", "[ci][sci][invariant]") {
  const System &s = h2o();
  const GroundState g = ground_state(s.h, s.sector);
  std::vector<Bits> prev;
  double prev_e = 0.0;
  for (double eps : {0.5, 0.1, 0.03, 1e-2, 3e-3, 1e-3}) {
    const auto dets = sci_select(g.vector, eps, s.r, 10, 0);
    const double e = ground_energy(s.h, dets);
    if (!prev.empty()) {
      CHECK(std::includes(dets.begin(), dets.end(), prev.begin(), prev.end()));
      CHECK(prev_e >= e - 1e-10);
    }
    CHECK(e >= g.energy - 1e-10);
    prev = dets;
    prev_e = e;
  }
}

TEST_CASE("selection below the smallest coefficient reproduces FCI",
          "[ci][sci][invariant]") {
  for (const std::string &name : {std::string("h2o_sto6g_0.960.fcidump"),
                                  std::string("h2_sto6g_1.300.fcidump")}) {
    const System s = load(name);
    const GroundState g = ground_state(s.h, s.sector);
    double smallest = 1.0;
    for (double c : g.vector.coeffs)
      if (std::abs(c) > 1e-12)
        smallest = std::min(smallest, std::abs(c));
    const auto dets = sci_select(g.vector, smallest / 2, s.r, s.data.n_elec, s.data.ms2);
    CHECK_THAT(ground_energy(s.h, dets), WithinAbs(g.energy, 1e-10));
  }
}

TEST_CASE("energy_and_fidelity examples", "[ci]") {
  const System &s = h2o();
  const Eigen::MatrixXd m = subspace_hamiltonian(s.h, s.sector);
  const Eigensystem e = diagonalize_subspace(m);
  const GroundState g = ground_state(m, s.sector);

  const Comparison same = energy_and_fidelity(g.vector, g.vector, m, g.energy);
  CHECK_THAT(same.energy_error, WithinAbs(0, 1e-10));
  CHECK_THAT(same.fidelity, WithinAbs(1, 1e-12));

  CiVector excited{s.sector, {}};
  for (Eigen::Index k = 0; k < 441; ++k)
    excited.coeffs.push_back(e.vectors(k, 1));
  const Comparison ex = energy_and_fidelity(excited, g.vector, m, g.energy);
  CHECK_THAT(ex.energy_error, WithinAbs(e.values(1) - e.values(0), 1e-9));
  CHECK_THAT(ex.fidelity, WithinAbs(0, 1e-12));

  // A truncated state is embedded with zeros and stays above the ground energy.
  const auto sub = sci_select(g.vector, 0.05, s.r, 10, 0);
  const GroundState gs = ground_state(s.h, sub);
  const Comparison tr = energy_and_fidelity(gs.vector, g.vector, m, g.energy);
  CHECK_THAT(tr.energy, WithinAbs(gs.energy, 1e-9));
  CHECK(tr.energy_error >= -1e-10);
  CHECK(tr.fidelity < 1.0);
  CHECK(tr.fidelity > 0.9);

  CHECK_THROWS_AS(energy_and_fidelity(CiVector{{1}, {1.0}}, g.vector, m, g.energy), Error);
}

TEST_CASE("CI vectors and determinant lists round trip through JSON", "[ci][serialize]") {
  const System s = load("h2_sto6g_0.740.fcidump");
  const GroundState g = ground_state(s.h, s.sector);
  const auto j = ci_to_json(g.vector, 4);
  CHECK(j.at("dets").at(0).get<std::string>() == "1100");
  int r = 0;
  const CiVector back = ci_from_json(j, &r);
  CHECK(r == 4);
  CHECK(back.dets == g.vector.dets);
  CHECK(back.coeffs == g.vector.coeffs);

  auto bad = j;
  bad["coeffs"][0] = 2.0;
  CHECK_THROWS_AS(ci_from_json(bad), Error);

  std::stringstream ss;
  write_det_list(ss, s.sector, 4);
  std::stringstream with_comments("# header\n\n" + ss.str());
  CHECK(read_det_list(with_comments) == s.sector);
  CHECK(dets_from_json(dets_to_json(s.sector, 4)) == s.sector);
}
