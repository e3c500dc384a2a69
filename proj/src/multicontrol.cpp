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

#include "walshci/multicontrol.hpp"

#include <numbers>
#include <vector>

#include "walshci/error.hpp"

namespace walshci {

void MultiControlBuilder::toffoli(int c1, int c2, int t) {
  const double q = std::numbers::pi / 4;
  Circuit net(circuit_.n_qubits());
  net.h(t)
      .cnot(c2, t)
      .rz(t, -q)
      .cnot(c1, t)
      .rz(t, q)
      .cnot(c2, t)
      .rz(t, -q)
      .cnot(c1, t)
      .rz(c2, q)
      .rz(t, q)
      .h(t)
      .cnot(c1, c2)
      .rz(c1, q)
      .rz(c2, -q)
      .cnot(c1, c2);
  circuit_.append(toffolis_ % 2 == 0 ? net : net.inverse());
  ++toffolis_;
}

void MultiControlBuilder::mcx_dirty(std::span<const int> controls, int target,
                                    std::span<const int> pool) {
  const std::size_t k = controls.size();
  if (k == 0) {
    circuit_.x(target);
    return;
  }
  if (k == 1) {
    circuit_.cnot(controls[0], target);
    return;
  }
  if (k == 2) {
    toffoli(controls[0], controls[1], target);
    return;
  }
  if (pool.size() < k - 2)
    throw Error(ErrorKind::Index, "not enough borrowed qubits for mcx");
  // chain[i] for i < k-2 are borrowed qubits; chain[k-2] is the target.
  std::vector<int> chain(pool.begin(), pool.begin() + static_cast<long>(k - 2));
  chain.push_back(target);
  const auto c = controls;
  auto ladder = [&](std::size_t top) {
    // Toffolis (c[i+2], chain[i]) -> chain[i+1] for i = top..0, the base
    // Toffoli, then back up.
    for (std::size_t i = top + 1; i-- > 0;)
      toffoli(c[i + 2], chain[i], chain[i + 1]);
    toffoli(c[0], c[1], chain[0]);
    for (std::size_t i = 0; i <= top; ++i)
      toffoli(c[i + 2], chain[i], chain[i + 1]);
  };
  ladder(k - 3);
  // Second pass restores the borrowed qubits.
  if (k == 3) {
    toffoli(c[0], c[1], chain[0]);
  } else {
    ladder(k - 4);
  }
}

void MultiControlBuilder::mcx(std::span<const int> controls, int target,
                              int borrowed) {
  const std::size_t m = controls.size();
  if (m <= 2) {
    mcx_dirty(controls, target, {});
    return;
  }
  const std::size_t m1 = (m + 1) / 2;
  std::vector<int> set1(controls.begin(), controls.begin() + static_cast<long>(m1));
  std::vector<int> set2(controls.begin() + static_cast<long>(m1), controls.end());
  std::vector<int> pool1 = set2;
  pool1.push_back(target);
  std::vector<int> set2b = set2;
  set2b.push_back(borrowed);
  for (int rep = 0; rep < 2; ++rep) {
    mcx_dirty(set1, borrowed, pool1);
    mcx_dirty(set2b, target, set1);
  }
}

void MultiControlBuilder::mcry(std::span<const int> controls, int target,
                               double angle) {
  const std::size_t c = controls.size();
  if (c == 0) {
    circuit_.ry(target, angle);
    return;
  }
  if (c == 1) {
    circuit_.cry(controls[0], target, angle);
    return;
  }
  const int last = controls[c - 1];
  const auto rest = controls.first(c - 1);
  mcx(rest, target, last);
  circuit_.cry(last, target, -angle / 2);
  mcx(rest, target, last);
  circuit_.cry(last, target, angle / 2);
}

namespace {

std::size_t mcx_dirty_cost(std::size_t k) {
  if (k <= 1)
    return k;
  if (k == 2)
    return 6;
  return 6 * 4 * (k - 2);
}

std::size_t mcx_cost(std::size_t m) {
  if (m <= 2)
    return mcx_dirty_cost(m);
  const std::size_t m1 = (m + 1) / 2;
  return 2 * (mcx_dirty_cost(m1) + mcx_dirty_cost(m - m1 + 1));
}

} // namespace

std::size_t mcry_cnot_cost(std::size_t controls) {
  if (controls == 0)
    return 0;
  if (controls == 1)
    return 2;
  return 2 * mcx_cost(controls - 1) + 4;
}

} // namespace walshci
