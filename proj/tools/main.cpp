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

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "walshci/error.hpp"

namespace {

int exit_code_for(walshci::ErrorKind kind) {
  using walshci::ErrorKind;
  switch (kind) {
  case ErrorKind::Io:
  case ErrorKind::Config:
  case ErrorKind::Parse:
    return 2;
  default:
    return 1;
  }
}

} // namespace

int main(int argc, char **argv) {
  using namespace walshci::cli;
  CLI::App app{"Subspace-selected variational CI with a Walsh series ansatz"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Expand all help");

  GlobalOptions g;
  std::uint64_t seed = 0;
  std::string output, trace;
  auto *o_seed = app.add_option("--seed", seed, "Seed for every random stream");
  app.add_option("--output,-o", output, "Output path (default: stdout)");
  app.add_option("--trace", trace, "JSON-lines optimizer trace path");
  app.add_option("--jobs,-j", g.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string fcidump;
  auto *jw = app.add_subcommand("jw", "Write the qubit Hamiltonian of an FCIDUMP");
  jw->add_option("fcidump", fcidump, "FCIDUMP file")->required();

  SectorOptions sector;
  std::string symmetry, ci_out;
  int n_elec = 0, sz2 = 0, frozen = 0, active = 0;
  auto *fci = app.add_subcommand("fci", "Exact ground state over a determinant sector");
  fci->add_option("fcidump", fcidump, "FCIDUMP file")->required();
  fci->add_option("--symmetry", symmetry, "spin-and-number | number | none");
  auto *o_nelec = fci->add_option("--nelec", n_elec, "Electron count (default: file)");
  auto *o_sz2 = fci->add_option("--sz2", sz2, "Twice Sz (default: file MS2)");
  auto *o_frozen = fci->add_option("--frozen-core", frozen, "Doubly occupied spatial orbitals");
  auto *o_active = fci->add_option("--active", active, "Active spatial orbitals after the core");
  fci->add_option("--ci-out", ci_out, "Write the ground-state CI vector here");

  std::string ci_path;
  double epsilon = 0.0;
  int sci_nelec = 0, sci_sz2 = 0;
  auto *sci = app.add_subcommand("sci-select", "Threshold plus singles and doubles selection");
  sci->add_option("ci_vector", ci_path, "Reference CI vector JSON")->required();
  sci->add_option("--epsilon,-e", epsilon, "Keep |c| above this")->required();
  auto *o_sci_nelec = sci->add_option("--nelec", sci_nelec, "Sector electron count");
  auto *o_sci_sz2 = sci->add_option("--sz2", sci_sz2, "Sector twice Sz");

  std::string config, resume;
  auto *vqe = app.add_subcommand("vqe", "Run the variational loop from a config");
  vqe->add_option("config", config, "Run config JSON")->required();
  vqe->add_option("--resume", resume, "Parameter file to start from");

  std::vector<std::string> scan_paths;
  auto *scan = app.add_subcommand("scan", "Run a config template over FCIDUMP files (CSV)");
  scan->add_option("config", config, "Run config JSON template")->required();
  scan->add_option("fcidumps", scan_paths, "FCIDUMP files");

  auto *gates = app.add_subcommand("gates", "CNOT accounting for a config");
  gates->add_option("config", config, "Run config JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*o_seed)
    g.seed = seed;
  if (!output.empty())
    g.output = output;
  if (!trace.empty())
    g.trace = trace;

  try {
    if (*jw)
      return cmd_jw(fcidump, g);
    if (*fci) {
      if (!symmetry.empty())
        sector.symmetry = symmetry;
      if (*o_nelec)
        sector.n_elec = n_elec;
      if (*o_sz2)
        sector.sz2 = sz2;
      if (*o_frozen)
        sector.frozen_core = frozen;
      if (*o_active)
        sector.active_orbitals = active;
      if (!ci_out.empty())
        sector.ci_out = ci_out;
      return cmd_fci(fcidump, sector, g);
    }
    if (*sci)
      return cmd_sci_select(ci_path, epsilon,
                            *o_sci_nelec ? std::optional<int>(sci_nelec) : std::nullopt,
                            *o_sci_sz2 ? std::optional<int>(sci_sz2) : std::nullopt, g);
    if (*vqe)
      return cmd_vqe(config, resume.empty() ? std::nullopt
                                            : std::optional<fs::path>(resume),
                     g);
    if (*scan) {
      if (scan_paths.empty()) {
        std::cerr << "walshci scan: usage error: no FCIDUMP paths given\n";
        return 2;
      }
      return cmd_scan(config, {scan_paths.begin(), scan_paths.end()}, g);
    }
    if (*gates)
      return cmd_gates(config, g);
  } catch (const walshci::Error &e) {
    std::cerr << "walshci: " << walshci::to_string(e.kind()) << " error: "
              << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "walshci: error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
