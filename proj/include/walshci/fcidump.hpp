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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

namespace walshci {

/// Integrals in the spatial-orbital basis. Orbital indices are 0-based here
/// (the file is 1-based). Two-body integrals are chemist notation (pq|rs).
struct FcidumpData {
  int n_orb = 0;
  int n_elec = 0;
  int ms2 = 0;
  double e_core = 0.0;
  std::vector<int> orbsym; // parsed, unused

  double one_body(int p, int q) const {
    return h1_[static_cast<std::size_t>(p * n_orb + q)];
  }
  double two_body(int p, int q, int r, int s) const {
    return h2_[index4(p, q, r, s)];
  }

  /// Sets h(p,q) and h(q,p).
  void set_one_body(int p, int q, double v);
  /// Sets all eight real-orbital images of (pq|rs).
  void set_two_body(int p, int q, int r, int s, double v);

  void resize(int norb);

private:
  std::size_t index4(int p, int q, int r, int s) const {
    const auto n = static_cast<std::size_t>(n_orb);
    return ((static_cast<std::size_t>(p) * n + static_cast<std::size_t>(q)) *
                n +
            static_cast<std::size_t>(r)) *
               n +
           static_cast<std::size_t>(s);
  }

  std::vector<double> h1_;
  std::vector<double> h2_;
};

/// Parses the &FCI namelist header followed by "value i j k l" lines.
/// Throws ParseError naming the offending line.
FcidumpData parse_fcidump(std::istream &in);

/// Throws Error(Io) when the file cannot be opened.
FcidumpData load_fcidump(const std::filesystem::path &path);

} // namespace walshci
