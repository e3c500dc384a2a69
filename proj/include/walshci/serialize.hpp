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

#include <json.hpp>

#include "walshci/ci.hpp"
#include "walshci/walsh.hpp"

namespace walshci {

using nlohmann::json;

/// {"dets": ["1100", ...], "coeffs": [...]} with qubit 0 leftmost.
json ci_to_json(const CiVector &ci, int r);
/// Validates the vector; the width is taken from the strings.
CiVector ci_from_json(const json &j, int *r = nullptr);

/// {"r": r, "count": D, "dets": [...]}
json dets_to_json(const std::vector<Bits> &dets, int r);
std::vector<Bits> dets_from_json(const json &j, int *r = nullptr);

/// Newline-separated bit strings, qubit 0 leftmost. Blank lines and lines
/// starting with '#' are skipped on read.
void write_det_list(std::ostream &out, const std::vector<Bits> &dets, int r);
std::vector<Bits> read_det_list(std::istream &in, int *r = nullptr);

/// {"indices": [...], "angles": [...], "dets": [...]}
json params_to_json(const AnsatzParams &params, const std::vector<Bits> &dets,
                    int r);
AnsatzParams params_from_json(const json &j, std::vector<Bits> *dets = nullptr,
                              int *r = nullptr);

/// Throws Error(Io) or Error(Parse).
json read_json_file(const std::filesystem::path &path);
/// Pretty-printed with a trailing newline. Throws Error(Io).
void write_json_file(const std::filesystem::path &path, const json &j);

} // namespace walshci
