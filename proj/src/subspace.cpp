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

#include "walshci/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "walshci/error.hpp"
#include "walshci/multicontrol.hpp"

namespace walshci {

namespace {

constexpr Bits kEvenBits = 0x5555555555555555ULL;

Bits low_mask(int r) { return r >= 64 ? ~Bits{0} : (Bits{1} << r) - 1; }

// Next larger integer with the same popcount.
Bits next_same_weight(Bits v) {
  const Bits t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (__builtin_ctzll(v) + 1));
}

std::vector<Bits> weight_strings(int r, int n) {
  std::vector<Bits> out;
  if (n == 0) {
    out.push_back(0);
    return out;
  }
  const Bits limit = Bits{1} << r;
  for (Bits v = (Bits{1} << n) - 1; v < limit; v = next_same_weight(v))
    out.push_back(v);
  return out;
}

} // namespace

int sz2_of(Bits bits) {
  return popcount(bits & kEvenBits) - popcount(bits & ~kEvenBits);
}

int Determinant::sz2() const { return sz2_of(bits); }

std::string format_det(Bits bits, int r) {
  std::string s(static_cast<std::size_t>(r), '0');
  for (int q = 0; q < r; ++q)
    if ((bits >> q) & 1U)
      s[static_cast<std::size_t>(q)] = '1';
  return s;
}

Bits parse_det(std::string_view text) {
  if (text.empty() || text.size() > 64)
    throw Error(ErrorKind::Parse, "determinant string must have 1..64 bits");
  Bits b = 0;
  for (std::size_t q = 0; q < text.size(); ++q) {
    if (text[q] == '1')
      b |= Bits{1} << q;
    else if (text[q] != '0')
      throw Error(ErrorKind::Parse,
                  "determinant string '" + std::string(text) +
                      "' has a character other than 0/1");
  }
  return b;
}

std::string Determinant::to_string() const { return format_det(bits, r); }

Determinant Determinant::parse(std::string_view text) {
  return {parse_det(text), static_cast<int>(text.size())};
}

const char *to_string(Symmetry s) {
  switch (s) {
  case Symmetry::SpinAndNumber:
    return "spin-and-number";
  case Symmetry::Number:
    return "number";
  case Symmetry::None:
    return "none";
  }
  return "?";
}

Symmetry parse_symmetry(std::string_view text) {
  if (text == "spin-and-number")
    return Symmetry::SpinAndNumber;
  if (text == "number")
    return Symmetry::Number;
  if (text == "none")
    return Symmetry::None;
  throw Error(ErrorKind::Config, "unknown symmetry '" + std::string(text) +
                                     "' (spin-and-number|number|none)");
}

std::vector<Bits> enumerate_determinants(const SubspaceSpec &spec) {
  const int r = spec.r;
  if (r <= 0 || r > 63)
    throw Error(ErrorKind::EmptySpace, "qubit count must be in 1..63");
  if (spec.explicit_dets) {
    std::vector<Bits> dets = *spec.explicit_dets;
    if (dets.empty())
      throw Error(ErrorKind::EmptySpace, "explicit determinant list is empty");
    std::sort(dets.begin(), dets.end());
    if (std::adjacent_find(dets.begin(), dets.end()) != dets.end())
      throw Error(ErrorKind::Duplicate, "duplicate determinant in explicit list");
    if (dets.back() & ~low_mask(r))
      throw Error(ErrorKind::Index, "explicit determinant wider than r");
    return dets;
  }
  switch (spec.symmetry) {
  case Symmetry::None: {
    if (r > 24)
      throw Error(ErrorKind::EmptySpace, "unrestricted space too large");
    std::vector<Bits> all(std::size_t{1} << r);
    std::iota(all.begin(), all.end(), Bits{0});
    return all;
  }
  case Symmetry::Number:
    if (spec.n_elec < 0 || spec.n_elec > r)
      throw Error(ErrorKind::EmptySpace, "electron count outside 0..r");
    return weight_strings(r, spec.n_elec);
  case Symmetry::SpinAndNumber: {
    const int n = spec.n_elec;
    const int n_up_slots = (r + 1) / 2, n_dn_slots = r / 2;
    if ((n + spec.sz2) % 2 != 0 || n < 0 || n > r)
      throw Error(ErrorKind::EmptySpace, "infeasible (N, 2Sz) combination");
    const int n_up = (n + spec.sz2) / 2, n_dn = (n - spec.sz2) / 2;
    if (n_up < 0 || n_dn < 0 || n_up > n_up_slots || n_dn > n_dn_slots)
      throw Error(ErrorKind::EmptySpace, "infeasible (N, 2Sz) combination");
    std::vector<Bits> out;
    for (Bits b : weight_strings(r, n))
      if (sz2_of(b) == spec.sz2)
        out.push_back(b);
    if (out.empty())
      throw Error(ErrorKind::EmptySpace, "empty determinant space");
    return out;
  }
  }
  throw Error(ErrorKind::EmptySpace, "unknown symmetry");
}

// Split-and-cyclic-shift Dicke preparation. Positions are 1-based string
// positions; position p lives on qubit p - 1.
Circuit dicke_circuit(int r, int n_elec) {
  if (n_elec <= 0 || n_elec > r)
    throw Error(ErrorKind::EmptySpace,
                "Dicke state needs 0 < N <= r (got N=" +
                    std::to_string(n_elec) + ", r=" + std::to_string(r) + ")");
  Circuit c(r);
  MultiControlBuilder mc(c);
  auto q = [](int pos) { return pos - 1; };
  for (int pos = r - n_elec + 1; pos <= r; ++pos)
    c.x(q(pos));

  auto scs = [&](int n, int k) {
    c.cnot(q(n - 1), q(n));
    c.cry(q(n), q(n - 1), 2.0 * std::acos(std::sqrt(1.0 / n)));
    c.cnot(q(n - 1), q(n));
    for (int l = 2; l <= k; ++l) {
      c.cnot(q(n - l), q(n));
      const int ctrl[2] = {q(n), q(n - l + 1)};
      mc.mcry(ctrl, q(n - l),
              2.0 * std::acos(std::sqrt(static_cast<double>(l) / n)));
      c.cnot(q(n - l), q(n));
    }
  };
  for (int n = r; n > n_elec; --n)
    scs(n, n_elec);
  for (int n = n_elec; n >= 2; --n)
    scs(n, n - 1);
  return c;
}

namespace {

struct Entry {
  Bits bits;
  double amp;
};

// Plan for merging x and y: relabel y so it differs from x only in bit d,
// then rotate the pair under controls that exclude every other string.
struct MergePlan {
  std::size_t xi = 0, yi = 0;
  int d = 0;
  Bits relabel = 0; // bits toggled (when bit d == y_d)
  std::vector<int> controls;
  std::size_t cost = 0;
};

MergePlan plan_merge(const std::vector<Entry> &S, std::size_t xi,
                     std::size_t yi, int r) {
  MergePlan p;
  p.xi = xi;
  p.yi = yi;
  const Bits x = S[xi].bits, y = S[yi].bits;
  const Bits diff = x ^ y;
  p.d = __builtin_ctzll(diff);
  const Bits dbit = Bits{1} << p.d;
  p.relabel = diff & ~dbit;
  const Bits yd = y & dbit;

  std::vector<Bits> others;
  others.reserve(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (i == xi || i == yi)
      continue;
    Bits z = S[i].bits;
    if ((z & dbit) == yd)
      z ^= p.relabel;
    others.push_back(z);
  }
  // Greedy cover: pick control bits (value as in x) that exclude the most
  // remaining strings.
  Bits used = dbit;
  while (!others.empty()) {
    int best = -1;
    std::size_t best_count = 0;
    for (int b = 0; b < r; ++b) {
      if ((used >> b) & 1U)
        continue;
      const Bits xb = x & (Bits{1} << b);
      std::size_t cnt = 0;
      for (Bits z : others)
        cnt += (z & (Bits{1} << b)) != xb;
      if (cnt > best_count) {
        best_count = cnt;
        best = b;
      }
    }
    if (best < 0)
      throw Error(ErrorKind::Consistency, "merge pair cannot be isolated");
    used |= Bits{1} << best;
    p.controls.push_back(best);
    const Bits xb = x & (Bits{1} << best);
    std::erase_if(others, [&](Bits z) {
      return (z & (Bits{1} << best)) != xb;
    });
  }
  p.cost = static_cast<std::size_t>(popcount(p.relabel)) +
           mcry_cnot_cost(p.controls.size());
  return p;
}

} // namespace

std::size_t sparse_cnot_bound(std::size_t D, int r) {
  if (D <= 1)
    return 0;
  const auto ru = static_cast<std::size_t>(r);
  return (D - 1) * ((ru - 1) + mcry_cnot_cost(ru - 1));
}

Circuit sparse_superposition_circuit(const std::vector<Bits> &dets, int r) {
  if (dets.empty())
    throw Error(ErrorKind::EmptySpace, "no determinants to superpose");
  if (r <= 0 || r > 63)
    throw Error(ErrorKind::Index, "qubit count must be in 1..63");
  {
    std::unordered_set<Bits> seen;
    for (Bits b : dets) {
      if (b & ~low_mask(r))
        throw Error(ErrorKind::Index, "determinant wider than r");
      if (!seen.insert(b).second)
        throw Error(ErrorKind::Duplicate,
                    "duplicate determinant " + format_det(b, r));
    }
  }

  const double a0 = 1.0 / std::sqrt(static_cast<double>(dets.size()));
  std::vector<Entry> S;
  S.reserve(dets.size());
  for (Bits b : dets)
    S.push_back({b, a0});
  std::sort(S.begin(), S.end(),
            [](const Entry &a, const Entry &b) { return a.bits < b.bits; });

  // Build the disentangler G with G|psi> = |0>, then invert it.
  Circuit g(r);
  MultiControlBuilder mc(g);
  constexpr std::size_t kCandidates = 24;
  while (S.size() > 1) {
    MergePlan best;
    best.cost = static_cast<std::size_t>(-1);
    const std::size_t stride = std::max<std::size_t>(1, S.size() / kCandidates);
    for (std::size_t xi = 0; xi < S.size(); xi += stride) {
      // Nearest Hamming neighbour as partner.
      std::size_t yi = xi == 0 ? 1 : 0;
      int best_dist = 65;
      for (std::size_t j = 0; j < S.size(); ++j) {
        if (j == xi)
          continue;
        const int dist = popcount(S[xi].bits ^ S[j].bits);
        if (dist < best_dist) {
          best_dist = dist;
          yi = j;
        }
      }
      MergePlan p = plan_merge(S, xi, yi, r);
      if (p.cost < best.cost)
        best = std::move(p);
    }

    const Bits dbit = Bits{1} << best.d;
    const Bits yd = S[best.yi].bits & dbit;
    if (best.relabel) {
      if (!yd)
        g.x(best.d);
      for (int i = 0; i < r; ++i)
        if ((best.relabel >> i) & 1U)
          g.cnot(best.d, i);
      if (!yd)
        g.x(best.d);
      for (auto &e : S)
        if ((e.bits & dbit) == yd)
          e.bits ^= best.relabel;
    }

    const Bits x = S[best.xi].bits;
    for (int b : best.controls)
      if (!((x >> b) & 1U))
        g.x(b);
    // Pair now differs only in bit d; move all weight to the d = 0 member.
    const std::size_t i0 = (S[best.xi].bits & dbit) ? best.yi : best.xi;
    const std::size_t i1 = i0 == best.xi ? best.yi : best.xi;
    const double amp0 = S[i0].amp, amp1 = S[i1].amp;
    mc.mcry(best.controls, best.d, -2.0 * std::atan2(amp1, amp0));
    for (int b : best.controls)
      if (!((x >> b) & 1U))
        g.x(b);
    S[i0].amp = std::hypot(amp0, amp1);
    S.erase(S.begin() + static_cast<long>(i1));
  }
  for (int q = 0; q < r; ++q)
    if ((S.front().bits >> q) & 1U)
      g.x(q);
  return g.inverse();
}

PreparedSubspace prepare_subspace(const SubspaceSpec &spec) {
  PreparedSubspace out{Circuit(spec.r), enumerate_determinants(spec)};
  if (spec.explicit_dets || spec.symmetry == Symmetry::SpinAndNumber) {
    out.circuit = sparse_superposition_circuit(out.dets, spec.r);
  } else if (spec.symmetry == Symmetry::Number) {
    out.circuit = spec.n_elec == 0 ? Circuit(spec.r)
                                   : dicke_circuit(spec.r, spec.n_elec);
  } else {
    for (int q = 0; q < spec.r; ++q)
      out.circuit.h(q);
  }
  return out;
}

} // namespace walshci
