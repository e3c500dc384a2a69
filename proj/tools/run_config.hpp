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
#include <optional>
#include <string>

#include "walshci/serialize.hpp"
#include "walshci/subspace.hpp"
#include "walshci/vqe.hpp"

namespace walshci::cli {

namespace fs = std::filesystem;

/// Validated run description. Relative input paths are resolved against the
/// directory of the config file; output paths against the working directory.
struct RunConfig {
  fs::path fcidump;
  std::string system;

  Symmetry symmetry = Symmetry::SpinAndNumber;
  std::optional<int> n_elec;
  std::optional<int> sz2;
  std::optional<fs::path> dets_file;
  /// Spatial orbitals kept doubly occupied / allowed to vary; orbitals past
  /// the window stay empty.
  std::optional<int> frozen_core;
  std::optional<int> active_orbitals;

  std::optional<double> factor;
  std::uint64_t walsh_seed = 0;
  bool use_qr = true;

  EnergyMode mode = EnergyMode::Exact;
  std::uint64_t shots = 1024;
  std::uint64_t vqe_seed = 0;
  OptimizerKind optimizer = OptimizerKind::BfgsFd;
  double tolerance = 1e-8;
  int patience = 5;
  int max_iter = 1000;
  InitPolicy::Kind init = InitPolicy::Kind::UniformTarget;
  std::optional<fs::path> init_ci;
  double init_scale = 0.1;
  std::uint64_t init_seed = 0;

  /// CI vector (typically the sector FCI) to compare the result against.
  std::optional<fs::path> reference;

  std::optional<fs::path> out_report;
  std::optional<fs::path> out_params;
  std::optional<fs::path> out_trace;
  std::optional<fs::path> out_state;

  double oversampling_factor() const;
  /// Applies a command-line seed to every random stream.
  void override_seed(std::uint64_t seed);
};

/// Throws Error(Config) naming the offending key; unknown keys are errors.
RunConfig parse_run_config(const json &j, const fs::path &base_dir);
RunConfig load_run_config(const fs::path &path);

} // namespace walshci::cli
