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

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "support/oracles.hpp"
#include "walshci/error.hpp"
#include "walshci/multicontrol.hpp"
#include "walshci/statevector.hpp"
#include "walshci/subspace.hpp"

using namespace walshci;

namespace {

double binom(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

// Max deviation from amplitude 1/sqrt(D) on dets and 0 elsewhere.
double uniform_error(const Statevector &s, const std::vector<Bits> &dets) {
  const double a = 1.0 / std::sqrt(double(dets.size()));
  std::set<Bits> in(dets.begin(), dets.end());
  double err = 0.0;
  for (std::size_t k = 0; k < s.dimension(); ++k)
    err = std::max(err, std::abs(s[k] - cplx(in.count(k) ? a : 0.0)));
  return err;
}

Statevector run(const Circuit &c) {
  return apply_circuit(Statevector(c.n_qubits()), c);
}

// Least-squares slope of y against x.
double slope(const std::vector<double> &x, const std::vector<double> &y) {
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / double(x.size());
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / double(y.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

// Checks a multi-controlled construction on every basis input: the target
// must change exactly as the ideal gate would and all other wires (including
// borrowed ones) must come back untouched. A lone Toffoli carries a global
// phase, so it is compared up to phase; composites must be phase free.
template <typename Build, typename Ideal>
void check_on_all_inputs(int n, Build build, Ideal ideal, bool up_to_phase = false) {
  Circuit c(n);
  MultiControlBuilder mc(c);
  build(mc);
  if (!up_to_phase)
    CHECK(mc.toffoli_count() % 2 == 0);
  oracle::CMatrix u = oracle::circuit_unitary(c);
  if (up_to_phase)
    u *= std::conj(u(0, 0)) / std::abs(u(0, 0));
  for (Bits in = 0; in < (Bits{1} << n); ++in) {
    const Eigen::VectorXcd expect = ideal(in);
    const Eigen::VectorXcd got = u.col(static_cast<Eigen::Index>(in));
    REQUIRE((got - expect).cwiseAbs().maxCoeff() < 1e-10);
  }
}

} // namespace

TEST_CASE("determinant formatting uses qubit 0 leftmost", "[subspace]") {
  CHECK(format_det(3, 4) == "1100");
  CHECK(parse_det("0011") == 12);
  const auto d = Determinant::parse("1001");
  CHECK(d.bits == 9);
  CHECK(d.r == 4);
  CHECK(d.particle_number() == 2);
  CHECK(d.sz2() == 0);
  CHECK(Determinant::parse("1000").sz2() == 1);
  CHECK(Determinant::parse("0100").sz2() == -1);
  CHECK_THROWS_AS(parse_det("10a1"), Error);
}

TEST_CASE("enumeration examples", "[subspace]") {
  SubspaceSpec s{12, Symmetry::SpinAndNumber, 6, 0, {}};
  CHECK(enumerate_determinants(s).size() == 400);
  s = {14, Symmetry::SpinAndNumber, 10, 0, {}};
  CHECK(enumerate_determinants(s).size() == 441);
  s = {4, Symmetry::SpinAndNumber, 2, 0, {}};
  CHECK(enumerate_determinants(s) == std::vector<Bits>{3, 6, 9, 12});
  CHECK(enumerate_determinants(s) == oracle::brute_force_sector(4, 2, 0));
}

TEST_CASE("enumeration errors", "[subspace]") {
  auto kind_of = [](SubspaceSpec s) {
    try {
      enumerate_determinants(s);
    } catch (const Error &e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  CHECK(kind_of({4, Symmetry::Number, 5, 0, {}}) == ErrorKind::EmptySpace);
  CHECK(kind_of({4, Symmetry::SpinAndNumber, 2, 1, {}}) == ErrorKind::EmptySpace);
  CHECK(kind_of({4, Symmetry::SpinAndNumber, 2, 4, {}}) == ErrorKind::EmptySpace);
  CHECK(kind_of({4, Symmetry::SpinAndNumber, 0, 0, std::vector<Bits>{3, 3}}) ==
        ErrorKind::Duplicate);
}

TEST_CASE("determinant counts match combinatorics", "[subspace][invariant]") {
  for (int r = 2; r <= 12; r += 2)
    for (int n = 0; n <= r; ++n) {
      CHECK(double(enumerate_determinants({r, Symmetry::Number, n, 0, {}}).size()) ==
            binom(r, n));
      for (int sz2 = -n; sz2 <= n; sz2 += 2) {
        const int up = (n + sz2) / 2, dn = (n - sz2) / 2;
        const double expect = binom(r / 2, up) * binom(r / 2, dn);
        if (expect == 0)
          continue;
        CHECK(double(enumerate_determinants({r, Symmetry::SpinAndNumber, n, sz2, {}})
                         .size()) == expect);
      }
    }
  CHECK(enumerate_determinants({3, Symmetry::None, 0, 0, {}}).size() == 8);
}

TEST_CASE("toffoli and multi-controlled X restore borrowed wires", "[multicontrol]") {
  auto flip_if = [](int n, Bits ctl_mask, int target) {
    return [=](Bits in) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(1 << n);
      const Bits out = (in & ctl_mask) == ctl_mask ? in ^ (Bits{1} << target) : in;
      v(static_cast<Eigen::Index>(out)) = 1.0;
      return v;
    };
  };
  check_on_all_inputs(3, [](MultiControlBuilder &m) { m.toffoli(0, 1, 2); },
                      flip_if(3, 0b011, 2), true);
  check_on_all_inputs(
      3, [](MultiControlBuilder &m) { m.toffoli(0, 1, 2); m.toffoli(1, 2, 0); },
      [](Bits in) {
        Bits b = (in & 3) == 3 ? in ^ 4 : in;
        b = (b & 6) == 6 ? b ^ 1 : b;
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
        v(static_cast<Eigen::Index>(b)) = 1.0;
        return v;
      });
  for (int k = 3; k <= 5; ++k) {
    INFO("dirty controls " << k);
    const int n = 2 * k - 1;
    std::vector<int> ctl(static_cast<std::size_t>(k)), pool;
    std::iota(ctl.begin(), ctl.end(), 0);
    for (int q = k + 1; q < n; ++q)
      pool.push_back(q);
    check_on_all_inputs(
        n, [&](MultiControlBuilder &m) { m.mcx_dirty(ctl, k, pool); },
        flip_if(n, (Bits{1} << k) - 1, k));
  }
  for (int m = 3; m <= 7; ++m) {
    INFO("single borrowed, controls " << m);
    const int n = m + 2;
    std::vector<int> ctl(static_cast<std::size_t>(m));
    std::iota(ctl.begin(), ctl.end(), 0);
    check_on_all_inputs(
        n, [&](MultiControlBuilder &b) { b.mcx(ctl, m, m + 1); },
        flip_if(n, (Bits{1} << m) - 1, m));
  }
}

TEST_CASE("multi-controlled RY on every input", "[multicontrol]") {
  const double theta = 0.731;
  for (int c = 0; c <= 5; ++c) {
    INFO("controls " << c);
    const int n = c + 1, t = c;
    std::vector<int> ctl(static_cast<std::size_t>(c));
    std::iota(ctl.begin(), ctl.end(), 0);
    const Bits mask = (Bits{1} << c) - 1;
    check_on_all_inputs(
        n, [&](MultiControlBuilder &m) { m.mcry(ctl, t, theta); },
        [&](Bits in) {
          Eigen::VectorXcd v = Eigen::VectorXcd::Zero(1 << n);
          if ((in & mask) != mask) {
            v(static_cast<Eigen::Index>(in)) = 1.0;
            return v;
          }
          const Bits b = Bits{1} << t;
          const double cs = std::cos(theta / 2), sn = std::sin(theta / 2);
          const bool one = in & b;
          v(static_cast<Eigen::Index>(in & ~b)) = one ? -sn : cs;
          v(static_cast<Eigen::Index>(in | b)) = one ? cs : sn;
          return v;
        });
    Circuit probe(n);
    MultiControlBuilder mc(probe);
    mc.mcry(ctl, t, theta);
    CHECK(probe.cnot_count() == mcry_cnot_cost(static_cast<std::size_t>(c)));
  }
}

TEST_CASE("Dicke examples", "[subspace][dicke]") {
  const auto s21 = run(dicke_circuit(2, 1));
  CHECK(std::abs(s21[1] - cplx(std::sqrt(0.5))) < 1e-12);
  CHECK(std::abs(s21[2] - cplx(std::sqrt(0.5))) < 1e-12);
  CHECK(std::abs(s21[0]) < 1e-12);

  const auto dets42 = enumerate_determinants({4, Symmetry::Number, 2, 0, {}});
  CHECK(dets42.size() == 6);
  CHECK(uniform_error(run(dicke_circuit(4, 2)), dets42) < 1e-12);

  const Circuit c84 = dicke_circuit(8, 4);
  const auto dets84 = enumerate_determinants({8, Symmetry::Number, 4, 0, {}});
  CHECK(dets84.size() == 70);
  CHECK(uniform_error(run(c84), dets84) < 1e-10);
  CHECK(c84.cnot_count() <= 8u * 8u * 4u);

  CHECK_THROWS_AS(dicke_circuit(4, 0), Error);
  CHECK_THROWS_AS(dicke_circuit(4, 5), Error);
}

TEST_CASE("Dicke states are exact for all small sizes", "[subspace][dicke][invariant]") {
  for (int r = 1; r <= 10; ++r)
    for (int n = 1; n <= r; ++n) {
      INFO("r=" << r << " N=" << n);
      const Circuit c = dicke_circuit(r, n);
      CHECK(uniform_error(run(c), enumerate_determinants({r, Symmetry::Number, n, 0, {}})) <
            1e-10);
      CHECK(c.cnot_count() <= std::size_t(8 * r * n));
    }
}

TEST_CASE("Dicke CNOT count grows linearly in r and in N", "[subspace][dicke][invariant]") {
  std::vector<double> rs, cr;
  for (int r = 4; r <= 12; ++r) {
    rs.push_back(r);
    cr.push_back(double(dicke_circuit(r, 3).cnot_count()));
  }
  // Successive differences stay bounded (no super-linear growth).
  for (std::size_t i = 2; i < cr.size(); ++i)
    CHECK(cr[i] - cr[i - 1] <= cr[i - 1] - cr[i - 2] + 1e-9);
  CHECK(slope(rs, cr) <= 8 * 3);

  std::vector<double> ns, cn;
  for (int n = 1; n <= 6; ++n) {
    ns.push_back(n);
    cn.push_back(double(dicke_circuit(12, n).cnot_count()));
  }
  CHECK(slope(ns, cn) <= 8 * 12);
}

TEST_CASE("sparse preparation examples", "[subspace][sparse]") {
  const Circuit h2 = sparse_superposition_circuit({3, 12}, 4);
  CHECK(uniform_error(run(h2), {3, 12}) < 1e-12);

  const Circuit single = sparse_superposition_circuit({0b1011}, 4);
  CHECK(single.cnot_count() == 0);
  CHECK(single.count(GateKind::X) == 3);
  CHECK(uniform_error(run(single), {0b1011}) < 1e-15);

  std::mt19937_64 rng(2024);
  std::set<Bits> pick;
  while (pick.size() < 20)
    pick.insert(rng() & 0x3FF);
  const std::vector<Bits> dets(pick.begin(), pick.end());
  const Circuit c = sparse_superposition_circuit(dets, 10);
  CHECK(uniform_error(run(c), dets) < 1e-10);
  CHECK(c.cnot_count() <= sparse_cnot_bound(dets.size(), 10));

  CHECK_THROWS_AS(sparse_superposition_circuit({3, 3}, 4), Error);
  CHECK_THROWS_AS(sparse_superposition_circuit({}, 4), Error);
}

TEST_CASE("sparse preparation amplitudes are real and nonnegative", "[subspace][sparse]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::set<Bits> pick;
    const std::size_t D = 2 + rng() % 30;
    while (pick.size() < D)
      pick.insert(rng() & 0xFF);
    const std::vector<Bits> dets(pick.begin(), pick.end());
    const Statevector s = run(sparse_superposition_circuit(dets, 8));
    for (std::size_t k = 0; k < s.dimension(); ++k) {
      CHECK(std::abs(s[k].imag()) < 1e-10);
      CHECK(s[k].real() > -1e-10);
    }
    CHECK(uniform_error(s, dets) < 1e-10);
  }
}

TEST_CASE("sparse two-qubit count grows no faster than linearly in D",
          "[subspace][sparse][invariant]") {
  const int r = 10;
  std::mt19937_64 rng(99);
  std::vector<Bits> all(1 << r);
  std::iota(all.begin(), all.end(), Bits{0});
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<double> ds, counts;
  for (std::size_t D : {8, 16, 32, 64, 128}) {
    std::vector<Bits> dets(all.begin(), all.begin() + static_cast<long>(D));
    std::sort(dets.begin(), dets.end());
    const std::size_t cnots = sparse_superposition_circuit(dets, r).cnot_count();
    CHECK(cnots <= sparse_cnot_bound(D, r));
    ds.push_back(double(D));
    counts.push_back(double(cnots));
  }
  // Each merge costs at most (r - 1) + mcry(r - 1) CNOTs, so the count per
  // determinant is bounded by a constant that depends on r only.
  const double per_det = double(sparse_cnot_bound(2, r));
  for (std::size_t i = 0; i < ds.size(); ++i)
    CHECK(counts[i] / ds[i] <= per_det);
}

TEST_CASE("prepare_subspace dispatch", "[subspace]") {
  auto none = prepare_subspace({3, Symmetry::None, 0, 0, {}});
  CHECK(none.circuit.size() == 3);
  CHECK(none.circuit.count(GateKind::H) == 3);
  CHECK(uniform_error(run(none.circuit), none.dets) < 1e-12);

  auto h2 = prepare_subspace({4, Symmetry::SpinAndNumber, 2, 0, std::vector<Bits>{3, 12}});
  CHECK(h2.dets == std::vector<Bits>{3, 12});
  CHECK(uniform_error(run(h2.circuit), h2.dets) < 1e-12);

  auto dicke = prepare_subspace({4, Symmetry::Number, 2, 0, {}});
  CHECK(dicke.dets.size() == 6);
  CHECK(uniform_error(run(dicke.circuit), dicke.dets) < 1e-12);
}

TEST_CASE("every prepared subspace is the uniform superposition of its dets",
          "[subspace][invariant]") {
  const std::vector<SubspaceSpec> specs = {
      {4, Symmetry::SpinAndNumber, 2, 0, {}},  {6, Symmetry::SpinAndNumber, 3, 1, {}},
      {8, Symmetry::SpinAndNumber, 4, 0, {}},  {8, Symmetry::SpinAndNumber, 2, -2, {}},
      {10, Symmetry::SpinAndNumber, 4, 0, {}}, {6, Symmetry::Number, 3, 0, {}},
      {9, Symmetry::Number, 4, 0, {}},         {4, Symmetry::None, 0, 0, {}},
      {12, Symmetry::SpinAndNumber, 6, 0, {}},
  };
  for (const auto &spec : specs) {
    INFO("r=" << spec.r << " N=" << spec.n_elec << " sym=" << to_string(spec.symmetry));
    const auto p = prepare_subspace(spec);
    CHECK(uniform_error(run(p.circuit), p.dets) < 1e-10);
  }
}
