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

#include "run_config.hpp"

#include <set>

#include "walshci/error.hpp"
#include "walshci/walsh.hpp"

namespace walshci::cli {

namespace {

[[noreturn]] void fail(const std::string &where, const std::string &what) {
  throw Error(ErrorKind::Config, "config " + where + ": " + what);
}

void allow_keys(const json &j, const std::string &where,
                const std::set<std::string> &allowed) {
  if (!j.is_object())
    fail(where, "expected an object");
  for (const auto &[key, value] : j.items())
    if (!allowed.count(key))
      fail(where, "unknown key '" + key + "'");
}

template <typename T>
std::optional<T> get_opt(const json &j, const std::string &key,
                         const std::string &where) {
  if (!j.contains(key) || j.at(key).is_null())
    return std::nullopt;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception &) {
    fail(where + "." + key, "wrong type");
  }
}

fs::path resolve(const fs::path &base, const std::string &p) {
  const fs::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

std::optional<fs::path> get_path(const json &j, const std::string &key,
                                 const std::string &where, const fs::path &base) {
  if (auto s = get_opt<std::string>(j, key, where))
    return resolve(base, *s);
  return std::nullopt;
}

std::uint64_t get_seed(const json &j, const std::string &key,
                       const std::string &where, std::uint64_t fallback) {
  auto v = get_opt<std::int64_t>(j, key, where);
  if (!v)
    return fallback;
  if (*v < 0)
    fail(where + "." + key, "must be >= 0");
  return static_cast<std::uint64_t>(*v);
}

} // namespace

double RunConfig::oversampling_factor() const {
  return factor ? *factor : default_oversampling_factor(system);
}

void RunConfig::override_seed(std::uint64_t seed) {
  walsh_seed = seed;
  vqe_seed = seed;
  init_seed = seed;
}

RunConfig parse_run_config(const json &j, const fs::path &base_dir) {
  allow_keys(j, "root",
             {"fcidump", "system", "subspace", "walsh", "vqe", "reference",
              "output"});
  RunConfig c;
  const auto fcidump = get_path(j, "fcidump", "root", base_dir);
  if (!fcidump)
    fail("root", "missing required key 'fcidump'");
  c.fcidump = *fcidump;
  c.system = get_opt<std::string>(j, "system", "root").value_or("");
  c.reference = get_path(j, "reference", "root", base_dir);

  if (j.contains("subspace")) {
    const auto &s = j.at("subspace");
    allow_keys(s, "subspace",
               {"symmetry", "n_elec", "sz2", "dets_file", "frozen_core",
                "active_orbitals"});
    if (auto sym = get_opt<std::string>(s, "symmetry", "subspace")) {
      try {
        c.symmetry = parse_symmetry(*sym);
      } catch (const Error &e) {
        fail("subspace.symmetry", e.what());
      }
    }
    c.n_elec = get_opt<int>(s, "n_elec", "subspace");
    c.sz2 = get_opt<int>(s, "sz2", "subspace");
    c.dets_file = get_path(s, "dets_file", "subspace", base_dir);
    c.frozen_core = get_opt<int>(s, "frozen_core", "subspace");
    c.active_orbitals = get_opt<int>(s, "active_orbitals", "subspace");
    if (c.frozen_core && *c.frozen_core < 0)
      fail("subspace.frozen_core", "must be >= 0");
    if (c.active_orbitals && *c.active_orbitals < 0)
      fail("subspace.active_orbitals", "must be >= 0");
  }

  if (j.contains("walsh")) {
    const auto &w = j.at("walsh");
    allow_keys(w, "walsh", {"factor", "seed", "use_qr"});
    c.factor = get_opt<double>(w, "factor", "walsh");
    if (c.factor && !(*c.factor >= 1.0))
      fail("walsh.factor", "must be >= 1");
    c.walsh_seed = get_seed(w, "seed", "walsh", 0);
    c.use_qr = get_opt<bool>(w, "use_qr", "walsh").value_or(true);
  }

  if (j.contains("vqe")) {
    const auto &v = j.at("vqe");
    allow_keys(v, "vqe",
               {"mode", "shots", "seed", "optimizer", "tolerance", "patience",
                "max_iter", "init"});
    if (auto m = get_opt<std::string>(v, "mode", "vqe")) {
      if (*m == "exact")
        c.mode = EnergyMode::Exact;
      else if (*m == "shots")
        c.mode = EnergyMode::Shots;
      else
        fail("vqe.mode", "expected 'exact' or 'shots'");
    }
    if (auto s = get_opt<std::int64_t>(v, "shots", "vqe")) {
      if (*s < 1)
        fail("vqe.shots", "must be >= 1");
      c.shots = static_cast<std::uint64_t>(*s);
    }
    c.vqe_seed = get_seed(v, "seed", "vqe", 0);
    if (auto o = get_opt<std::string>(v, "optimizer", "vqe")) {
      if (*o == "nelder-mead")
        c.optimizer = OptimizerKind::NelderMead;
      else if (*o == "bfgs-fd")
        c.optimizer = OptimizerKind::BfgsFd;
      else
        fail("vqe.optimizer", "expected 'nelder-mead' or 'bfgs-fd'");
    }
    c.tolerance = get_opt<double>(v, "tolerance", "vqe").value_or(c.tolerance);
    if (!(c.tolerance > 0.0))
      fail("vqe.tolerance", "must be > 0");
    c.patience = get_opt<int>(v, "patience", "vqe").value_or(c.patience);
    if (c.patience < 1)
      fail("vqe.patience", "must be >= 1");
    c.max_iter = get_opt<int>(v, "max_iter", "vqe").value_or(c.max_iter);
    if (c.max_iter < 0)
      fail("vqe.max_iter", "must be >= 0");
    if (v.contains("init")) {
      const auto &in = v.at("init");
      allow_keys(in, "vqe.init", {"kind", "ci_vector", "scale", "seed"});
      const auto kind =
          get_opt<std::string>(in, "kind", "vqe.init").value_or("uniform-target");
      if (kind == "uniform-target")
        c.init = InitPolicy::Kind::UniformTarget;
      else if (kind == "ci-seed")
        c.init = InitPolicy::Kind::CiSeed;
      else if (kind == "random")
        c.init = InitPolicy::Kind::Random;
      else
        fail("vqe.init.kind", "expected uniform-target, ci-seed or random");
      c.init_ci = get_path(in, "ci_vector", "vqe.init", base_dir);
      if (c.init == InitPolicy::Kind::CiSeed && !c.init_ci)
        fail("vqe.init", "ci-seed needs 'ci_vector'");
      c.init_scale = get_opt<double>(in, "scale", "vqe.init").value_or(0.1);
      c.init_seed = get_seed(in, "seed", "vqe.init", 0);
    }
  }

  if (j.contains("output")) {
    const auto &o = j.at("output");
    allow_keys(o, "output", {"report", "params", "trace", "state"});
    c.out_report = get_path(o, "report", "output", {});
    c.out_params = get_path(o, "params", "output", {});
    c.out_trace = get_path(o, "trace", "output", {});
    c.out_state = get_path(o, "state", "output", {});
  }
  return c;
}

RunConfig load_run_config(const fs::path &path) {
  return parse_run_config(read_json_file(path), path.parent_path());
}

} // namespace walshci::cli
