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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "run_config.hpp"
#include "walshci/fcidump.hpp"

namespace walshci::cli {

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::optional<fs::path> output;
  std::optional<fs::path> trace;
  int jobs = 1;
};

struct SectorOptions {
  std::optional<std::string> symmetry;
  std::optional<int> n_elec;
  std::optional<int> sz2;
  std::optional<int> frozen_core;
  std::optional<int> active_orbitals;
  std::optional<fs::path> ci_out;
};

/// Determinants and circuit for a run, honouring explicit lists and
/// orbital windows.
struct SubspaceSetup {
  int r = 0;
  int n_elec = 0;
  int sz2 = 0;
  PreparedSubspace prepared;
};

SubspaceSetup build_subspace(const RunConfig &config, const FcidumpData &data,
                             bool with_circuit = true);

/// Each command returns the process exit code.
int cmd_jw(const fs::path &fcidump, const GlobalOptions &g);
int cmd_fci(const fs::path &fcidump, const SectorOptions &s,
            const GlobalOptions &g);
int cmd_sci_select(const fs::path &ci_vector, double epsilon,
                   std::optional<int> n_elec, std::optional<int> sz2,
                   const GlobalOptions &g);
int cmd_vqe(const fs::path &config, const std::optional<fs::path> &resume,
            const GlobalOptions &g);
int cmd_scan(const fs::path &config, const std::vector<fs::path> &fcidumps,
             const GlobalOptions &g);
int cmd_gates(const fs::path &config, const GlobalOptions &g);

/// Bond length parsed from the last '_'-separated field of the file stem,
/// e.g. h2_sto6g_0.740.fcidump -> 0.74.
std::optional<double> bond_length_from_name(const fs::path &p);

} // namespace walshci::cli
