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

#include "walshci/serialize.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include "walshci/error.hpp"
#include "walshci/subspace.hpp"

namespace walshci {

namespace {

json det_strings(const std::vector<Bits> &dets, int r) {
  json a = json::array();
  for (Bits b : dets)
    a.push_back(format_det(b, r));
  return a;
}

std::vector<Bits> parse_det_strings(const json &a, int *r) {
  if (!a.is_array())
    throw Error(ErrorKind::Parse, "'dets' must be an array of bit strings");
  std::vector<Bits> out;
  int width = -1;
  for (const auto &e : a) {
    if (!e.is_string())
      throw Error(ErrorKind::Parse, "determinant entries must be strings");
    const auto s = e.get<std::string>();
    if (width >= 0 && static_cast<int>(s.size()) != width)
      throw Error(ErrorKind::Parse, "determinant strings differ in width");
    width = static_cast<int>(s.size());
    out.push_back(parse_det(s));
  }
  if (r)
    *r = width;
  return out;
}

const json &field(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

} // namespace

json ci_to_json(const CiVector &ci, int r) {
  return {{"dets", det_strings(ci.dets, r)}, {"coeffs", ci.coeffs}};
}

CiVector ci_from_json(const json &j, int *r) {
  CiVector ci;
  try {
    ci.dets = parse_det_strings(field(j, "dets"), r);
    ci.coeffs = field(j, "coeffs").get<std::vector<double>>();
  } catch (const json::exception &e) {
    throw Error(ErrorKind::Parse, std::string("CI vector: ") + e.what());
  }
  ci.validate();
  return ci;
}

json dets_to_json(const std::vector<Bits> &dets, int r) {
  return {{"r", r}, {"count", dets.size()}, {"dets", det_strings(dets, r)}};
}

std::vector<Bits> dets_from_json(const json &j, int *r) {
  int width = 0;
  auto dets = parse_det_strings(field(j, "dets"), &width);
  if (j.contains("r") && j.at("r").get<int>() != width && !dets.empty())
    throw Error(ErrorKind::Parse, "'r' does not match the string width");
  if (r)
    *r = dets.empty() && j.contains("r") ? j.at("r").get<int>() : width;
  return dets;
}

void write_det_list(std::ostream &out, const std::vector<Bits> &dets, int r) {
  for (Bits b : dets)
    out << format_det(b, r) << '\n';
}

std::vector<Bits> read_det_list(std::istream &in, int *r) {
  std::vector<Bits> dets;
  std::string line;
  std::size_t lineno = 0;
  int width = -1;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    if (line.empty() || line[0] == '#')
      continue;
    if (width >= 0 && static_cast<int>(line.size()) != width)
      throw ParseError(lineno, "determinant width differs from earlier lines");
    width = static_cast<int>(line.size());
    try {
      dets.push_back(parse_det(line));
    } catch (const Error &e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (r)
    *r = width;
  return dets;
}

json params_to_json(const AnsatzParams &params, const std::vector<Bits> &dets,
                    int r) {
  return {{"indices", params.indices},
          {"angles", params.angles},
          {"dets", det_strings(dets, r)}};
}

AnsatzParams params_from_json(const json &j, std::vector<Bits> *dets, int *r) {
  AnsatzParams p;
  try {
    p.indices = field(j, "indices").get<std::vector<WalshIndex>>();
    p.angles = field(j, "angles").get<std::vector<double>>();
    auto d = parse_det_strings(field(j, "dets"), r);
    if (dets)
      *dets = std::move(d);
  } catch (const json::exception &e) {
    throw Error(ErrorKind::Parse, std::string("parameter file: ") + e.what());
  }
  if (p.indices.size() != p.angles.size())
    throw Error(ErrorKind::Parse, "indices and angles differ in length");
  return p;
}

json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::Io, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path &path, const json &j) {
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out)
    throw Error(ErrorKind::Io, "write failed for " + path.string());
}

} // namespace walshci
