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

#include "commands.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "walshci/ci.hpp"
#include "walshci/error.hpp"
#include "walshci/hamiltonian.hpp"
#include "walshci/statevector.hpp"

namespace walshci::cli {

namespace {

// Writes text to a file, or stdout when no path is given.
void emit(const std::optional<fs::path> &path, const std::string &text) {
  if (!path) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(*path);
  if (!out)
    throw Error(ErrorKind::Io, "cannot write " + path->string());
  out << text;
}

std::string fixed(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

Bits window_core_mask(int frozen) {
  return frozen <= 0 ? 0 : (Bits{1} << (2 * frozen)) - 1;
}

std::vector<Bits> apply_window(const std::vector<Bits> &dets, int r,
                               std::optional<int> frozen,
                               std::optional<int> active) {
  if (!frozen && !active)
    return dets;
  const int k = frozen.value_or(0);
  const int hi = active ? 2 * (k + *active) : r;
  if (hi > r)
    throw Error(ErrorKind::Config, "orbital window exceeds the orbital count");
  const Bits core = window_core_mask(k);
  const Bits outside = hi >= 64 ? 0 : ~((Bits{1} << hi) - 1);
  std::vector<Bits> out;
  for (Bits b : dets)
    if ((b & core) == core && (b & outside) == 0)
      out.push_back(b);
  if (out.empty())
    throw Error(ErrorKind::EmptySpace, "orbital window leaves no determinants");
  return out;
}

struct Pipeline {
  FcidumpData data;
  QubitOperator hamiltonian;
  SubspaceSetup subspace;
};

Pipeline load_pipeline(const RunConfig &config, bool with_circuit) {
  Pipeline p;
  p.data = load_fcidump(config.fcidump);
  p.hamiltonian = build_hamiltonian(p.data);
  p.subspace = build_subspace(config, p.data, with_circuit);
  return p;
}

VqeConfig vqe_config(const RunConfig &c, int jobs) {
  VqeConfig v;
  v.mode = c.mode;
  v.shots = c.shots;
  v.seed = c.vqe_seed;
  v.optimizer = c.optimizer;
  v.tolerance = c.tolerance;
  v.patience = c.patience;
  v.max_iter = c.max_iter;
  v.jobs = jobs;
  v.init.kind = c.init;
  v.init.scale = c.init_scale;
  v.init.seed = c.init_seed;
  if (c.init_ci)
    v.init.ci = ci_from_json(read_json_file(*c.init_ci));
  return v;
}

WalshOptions walsh_options(const RunConfig &c) {
  return {c.oversampling_factor(), c.walsh_seed, c.use_qr};
}

RunConfig load_with_globals(const fs::path &path, const GlobalOptions &g) {
  RunConfig c = load_run_config(path);
  if (g.seed)
    c.override_seed(*g.seed);
  if (g.output)
    c.out_report = g.output;
  if (g.trace)
    c.out_trace = g.trace;
  return c;
}

struct VqeOutcome {
  VqeProblem problem;
  VqeResult result;
  GroundState oracle;
  CiVector state;
};

VqeOutcome run_pipeline_vqe(const RunConfig &config, Pipeline pipe,
                            const std::optional<fs::path> &resume, int jobs,
                            std::ostream *trace) {
  VqeOutcome o;
  o.problem = build_problem(std::move(pipe.hamiltonian),
                            std::move(pipe.subspace.prepared),
                            walsh_options(config));
  VqeConfig vc = vqe_config(config, jobs);
  vc.trace = trace;
  if (resume) {
    std::vector<Bits> dets;
    const AnsatzParams saved = params_from_json(read_json_file(*resume), &dets);
    if (dets != o.problem.dets)
      throw Error(ErrorKind::DimensionMismatch,
                  "resume file determinants differ from the configured subspace");
    o.problem.wft = make_wft(dets, saved.indices);
    vc.init.kind = InitPolicy::Kind::Explicit;
    vc.init.angles = saved.angles;
  }
  o.oracle = ground_state(o.problem.h_sub, o.problem.dets);
  o.result = run_vqe(vc, o.problem);
  const auto amps = predicted_amplitudes(o.result.params, o.problem.dets);
  o.state = CiVector{o.problem.dets, amps};
  return o;
}

} // namespace

std::optional<double> bond_length_from_name(const fs::path &p) {
  const std::string stem = p.stem().string();
  const auto pos = stem.rfind('_');
  const std::string tail = pos == std::string::npos ? stem : stem.substr(pos + 1);
  std::istringstream in(tail);
  in.imbue(std::locale::classic());
  double v = 0.0;
  if (in >> v && in.eof())
    return v;
  return std::nullopt;
}

SubspaceSetup build_subspace(const RunConfig &config, const FcidumpData &data,
                             bool with_circuit) {
  SubspaceSetup s;
  s.r = 2 * data.n_orb;
  s.n_elec = config.n_elec.value_or(data.n_elec);
  s.sz2 = config.sz2.value_or(data.ms2);
  SubspaceSpec spec;
  spec.r = s.r;
  spec.symmetry = config.symmetry;
  spec.n_elec = s.n_elec;
  spec.sz2 = s.sz2;
  if (config.dets_file) {
    std::ifstream in(*config.dets_file);
    if (!in)
      throw Error(ErrorKind::Io, "cannot open " + config.dets_file->string());
    int width = 0;
    auto dets = read_det_list(in, &width);
    if (width != s.r)
      throw Error(ErrorKind::WidthMismatch,
                  "determinant list width " + std::to_string(width) +
                      " does not match " + std::to_string(s.r) + " qubits");
    spec.explicit_dets = std::move(dets);
  } else if (config.frozen_core || config.active_orbitals) {
    spec.explicit_dets =
        apply_window(enumerate_determinants(spec), s.r, config.frozen_core,
                     config.active_orbitals);
  }
  if (with_circuit) {
    s.prepared = prepare_subspace(spec);
  } else {
    s.prepared.circuit = Circuit(s.r);
    s.prepared.dets = enumerate_determinants(spec);
  }
  return s;
}

int cmd_jw(const fs::path &fcidump, const GlobalOptions &g) {
  const QubitOperator h = build_hamiltonian(load_fcidump(fcidump));
  std::ostringstream out;
  write_operator(out, h);
  emit(g.output, out.str());
  std::cerr << "walshci jw: " << h.size() << " terms on " << h.n_qubits()
            << " qubits\n";
  return 0;
}

int cmd_fci(const fs::path &fcidump, const SectorOptions &s,
            const GlobalOptions &g) {
  RunConfig config;
  config.fcidump = fcidump;
  if (s.symmetry)
    config.symmetry = parse_symmetry(*s.symmetry);
  config.n_elec = s.n_elec;
  config.sz2 = s.sz2;
  config.frozen_core = s.frozen_core;
  config.active_orbitals = s.active_orbitals;
  const Pipeline pipe = load_pipeline(config, false);
  const auto &dets = pipe.subspace.prepared.dets;
  const GroundState gs = ground_state(pipe.hamiltonian, dets);
  std::size_t nonzero = 0;
  for (double c : gs.vector.coeffs)
    nonzero += std::abs(c) > 1e-10;

  json report = {{"energy", gs.energy},
                 {"n_dets", dets.size()},
                 {"n_nonzero", nonzero},
                 {"r", pipe.subspace.r},
                 {"n_elec", pipe.subspace.n_elec},
                 {"sz2", pipe.subspace.sz2},
                 {"symmetry", to_string(config.symmetry)},
                 {"ci_vector", s.ci_out ? json(s.ci_out->string()) : json()}};
  if (nonzero < dets.size())
    report["note"] = std::to_string(dets.size() - nonzero) +
                     " determinants carry zero weight by spatial symmetry";
  if (s.frozen_core || s.active_orbitals)
    report["window"] = {{"frozen_core", s.frozen_core.value_or(0)},
                        {"active_orbitals",
                         s.active_orbitals ? json(*s.active_orbitals) : json()}};
  if (s.ci_out)
    write_json_file(*s.ci_out, ci_to_json(gs.vector, pipe.subspace.r));
  emit(g.output, report.dump(2) + "\n");
  return 0;
}

int cmd_sci_select(const fs::path &ci_vector, double epsilon,
                   std::optional<int> n_elec, std::optional<int> sz2,
                   const GlobalOptions &g) {
  int r = 0;
  const CiVector ref = ci_from_json(read_json_file(ci_vector), &r);
  // Sector defaults to that of the leading reference determinant.
  std::size_t lead = 0;
  for (std::size_t i = 1; i < ref.size(); ++i)
    if (std::abs(ref.coeffs[i]) > std::abs(ref.coeffs[lead]))
      lead = i;
  const int n = n_elec.value_or(popcount(ref.dets[lead]));
  const int s = sz2.value_or(sz2_of(ref.dets[lead]));
  const auto dets = sci_select(ref, epsilon, r, n, s);
  std::ostringstream out;
  write_det_list(out, dets, r);
  if (g.output) {
    emit(g.output, out.str());
    std::cout << dets.size() << "\n";
  } else {
    std::cout << out.str();
    std::cerr << dets.size() << "\n";
  }
  return 0;
}

int cmd_vqe(const fs::path &config_path, const std::optional<fs::path> &resume,
            const GlobalOptions &g) {
  const auto t0 = std::chrono::steady_clock::now();
  const RunConfig config = load_with_globals(config_path, g);
  Pipeline pipe = load_pipeline(config, true);
  const int r = pipe.subspace.r;

  std::ofstream trace_file;
  if (config.out_trace) {
    trace_file.open(*config.out_trace);
    if (!trace_file)
      throw Error(ErrorKind::Io, "cannot write " + config.out_trace->string());
  }
  VqeOutcome o = run_pipeline_vqe(config, std::move(pipe), resume, g.jobs,
                                  config.out_trace ? &trace_file : nullptr);
  const VqeResult &res = o.result;
  const Comparison cmp =
      energy_and_fidelity(o.state, o.oracle.vector, o.problem.h_sub, o.oracle.energy);
  const Circuit walsh = diagonal_circuit(res.params, r + 1);
  const std::size_t sub_cnots = o.problem.subspace_circuit.cnot_count();

  json report = {
      {"energy", res.energy},
      {"best_estimate", res.best_estimate},
      {"exact_energy", cmp.energy},
      {"oracle_energy", o.oracle.energy},
      {"error", res.energy - o.oracle.energy},
      {"fidelity", cmp.fidelity},
      {"p_success", res.p_success},
      {"cnot_counts",
       {{"subspace", sub_cnots},
        {"walsh", walsh.cnot_count()},
        {"total", sub_cnots + walsh.cnot_count()}}},
      {"n_dets", o.problem.dets.size()},
      {"n_params", res.params.size()},
      {"iterations", res.iterations},
      {"improvements", res.improvements},
      {"evaluations", res.evaluations},
      {"converged", res.converged},
      {"mode", to_string(config.mode)},
      {"optimizer", to_string(res.optimizer_used)},
      {"walsh_indices_requested", o.problem.requested_indices},
      {"walsh_indices_clamped", o.problem.clamped},
  };
  if (config.reference) {
    const CiVector ref = ci_from_json(read_json_file(*config.reference));
    const Eigen::MatrixXd h_ref = subspace_hamiltonian(o.problem.hamiltonian, ref.dets);
    const Eigen::Map<const Eigen::VectorXd> rv(ref.coeffs.data(),
                                               static_cast<Eigen::Index>(ref.size()));
    const double e_ref = rv.dot(h_ref * rv);
    const Comparison rc = energy_and_fidelity(o.state, ref, h_ref, e_ref);
    report["reference"] = {{"energy", e_ref},
                           {"error", rc.energy_error},
                           {"fidelity", rc.fidelity}};
  }
  if (config.out_params)
    write_json_file(*config.out_params,
                    params_to_json(res.params, o.problem.dets, r));
  if (config.out_state) {
    std::ofstream st(*config.out_state);
    if (!st)
      throw Error(ErrorKind::Io, "cannot write " + config.out_state->string());
    write_statevector(st, simulate_ansatz(o.problem, res.params), 1e-12);
  }
  report["wall_time_s"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(config.out_report, report.dump(2) + "\n");
  return 0;
}

int cmd_scan(const fs::path &config_path, const std::vector<fs::path> &fcidumps,
             const GlobalOptions &g) {
  if (fcidumps.empty())
    throw Error(ErrorKind::Config, "scan needs at least one FCIDUMP path");
  const RunConfig base = load_with_globals(config_path, g);

  struct Row {
    std::string label, bond, vqe, oracle, error, status = "ok";
  };
  std::vector<Row> rows(fcidumps.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < fcidumps.size(); i = next++) {
      Row &row = rows[i];
      row.label = fcidumps[i].stem().string();
      if (auto b = bond_length_from_name(fcidumps[i]))
        row.bond = fixed(*b, 3);
      try {
        RunConfig c = base;
        c.fcidump = fcidumps[i];
        const VqeOutcome o =
            run_pipeline_vqe(c, load_pipeline(c, true), std::nullopt, 1, nullptr);
        row.vqe = fixed(o.result.energy);
        row.oracle = fixed(o.oracle.energy);
        row.error = fixed(o.result.energy - o.oracle.energy);
      } catch (const std::exception &e) {
        row.status = std::string("error: ") + e.what();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(g.jobs, static_cast<int>(fcidumps.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  std::ostringstream csv;
  csv << "label,bond_length,vqe_energy,oracle_energy,error,status\n";
  std::size_t failures = 0;
  for (const Row &row : rows) {
    std::string status = row.status;
    for (char &ch : status)
      if (ch == ',' || ch == '\n')
        ch = ';';
    csv << row.label << ',' << row.bond << ',' << row.vqe << ',' << row.oracle
        << ',' << row.error << ',' << status << '\n';
    failures += row.status != "ok";
  }
  emit(base.out_report, csv.str());
  if (failures)
    std::cerr << "walshci scan: warning: " << failures << " of " << rows.size()
              << " points failed\n";
  return 0;
}

int cmd_gates(const fs::path &config_path, const GlobalOptions &g) {
  const RunConfig config = load_with_globals(config_path, g);
  Pipeline pipe = load_pipeline(config, true);
  const int r = pipe.subspace.r;
  const VqeProblem problem = build_problem(std::move(pipe.hamiltonian),
                                           std::move(pipe.subspace.prepared),
                                           walsh_options(config));
  InitPolicy init;
  const AnsatzParams params =
      make_params(problem.wft, initial_angles(problem, init));
  const Circuit walsh = diagonal_circuit(params, r + 1);
  const Circuit naive = naive_diagonal_circuit(params, r + 1);
  const std::size_t sub = problem.subspace_circuit.cnot_count();
  const std::size_t w = walsh.cnot_count();
  json report = {
      {"cnot_counts", {{"subspace", sub}, {"walsh", w}, {"total", sub + w}}},
      {"summary", std::to_string(sub) + " + " + std::to_string(w) + " = " +
                      std::to_string(sub + w)},
      {"walsh_unsorted_cnots", naive.cnot_count()},
      {"n_params", params.size()},
      {"n_dets", problem.dets.size()},
      {"r", r},
      {"symmetry", to_string(config.symmetry)},
      {"use_qr", config.use_qr},
      {"subspace_gates", problem.subspace_circuit.size()},
      {"walsh_gates", walsh.size()},
  };
  emit(config.out_report, report.dump(2) + "\n");
  return 0;
}

} // namespace walshci::cli
