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

#include "walshci/fcidump.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "walshci/error.hpp"

namespace walshci {

void FcidumpData::resize(int norb) {
  n_orb = norb;
  const auto n = static_cast<std::size_t>(norb);
  h1_.assign(n * n, 0.0);
  h2_.assign(n * n * n * n, 0.0);
}

void FcidumpData::set_one_body(int p, int q, double v) {
  h1_[static_cast<std::size_t>(p * n_orb + q)] = v;
  h1_[static_cast<std::size_t>(q * n_orb + p)] = v;
}

void FcidumpData::set_two_body(int p, int q, int r, int s, double v) {
  for (auto [a, b, c, d] : {std::array{p, q, r, s}, std::array{q, p, r, s},
                            std::array{p, q, s, r}, std::array{q, p, s, r},
                            std::array{r, s, p, q}, std::array{s, r, p, q},
                            std::array{r, s, q, p}, std::array{s, r, q, p}})
    h2_[index4(a, b, c, d)] = v;
}

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

bool parse_int(const std::string &tok, int &out) {
  const char *first = tok.data();
  const char *last = first + tok.size();
  if (first != last && *first == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

bool parse_double(const std::string &tok, double &out) {
  // Fortran writers sometimes emit 1.0D-03.
  std::string t = tok;
  std::replace(t.begin(), t.end(), 'D', 'E');
  std::replace(t.begin(), t.end(), 'd', 'e');
  try {
    std::size_t used = 0;
    out = std::stod(t, &used);
    return used == t.size();
  } catch (const std::exception &) {
    return false;
  }
}

// Splits the namelist body into KEY -> list of value tokens.
std::map<std::string, std::vector<std::string>>
parse_namelist(const std::string &body, std::size_t line) {
  std::map<std::string, std::vector<std::string>> out;
  std::string text = body;
  std::replace(text.begin(), text.end(), ',', ' ');
  // Make "KEY=" its own token even when written as "KEY = 1".
  std::string spaced;
  for (char c : text) {
    if (c == '=') {
      spaced += " = ";
    } else {
      spaced += c;
    }
  }
  std::istringstream is(spaced);
  std::vector<std::string> toks;
  for (std::string t; is >> t;)
    toks.push_back(t);
  std::string key;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i + 1 < toks.size() && toks[i + 1] == "=") {
      key = upper(toks[i]);
      out[key];
      ++i;
      continue;
    }
    if (key.empty())
      throw ParseError(line, "value '" + toks[i] + "' before any key");
    out[key].push_back(toks[i]);
  }
  return out;
}

} // namespace

FcidumpData parse_fcidump(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;
  std::string header;
  std::size_t header_line = 0;
  bool started = false;
  bool ended = false;

  while (!ended && std::getline(in, line)) {
    ++lineno;
    std::string u = upper(line);
    if (!started) {
      auto pos = u.find("&FCI");
      if (pos == std::string::npos) {
        if (u.find_first_not_of(" \t\r") == std::string::npos)
          continue;
        throw ParseError(lineno, "expected '&FCI' namelist header");
      }
      started = true;
      header_line = lineno;
      u = u.substr(pos + 4);
    }
    // Terminators: &END, $END or a lone '/'.
    for (const char *term : {"&END", "$END", "/"}) {
      auto pos = u.find(term);
      if (pos != std::string::npos) {
        u = u.substr(0, pos);
        ended = true;
        break;
      }
    }
    header += " " + u;
  }
  if (!started)
    throw ParseError(lineno, "empty input, no '&FCI' header");
  if (!ended)
    throw ParseError(lineno, "unterminated &FCI namelist");

  auto kv = parse_namelist(header, header_line);
  auto get_int = [&](const char *key, bool required, int fallback) {
    auto it = kv.find(key);
    if (it == kv.end() || it->second.empty()) {
      if (required)
        throw ParseError(header_line, std::string("missing ") + key);
      return fallback;
    }
    int v = 0;
    if (!parse_int(it->second.front(), v))
      throw ParseError(header_line,
                       std::string("non-integer value for ") + key);
    return v;
  };

  FcidumpData data;
  const int norb = get_int("NORB", true, 0);
  if (norb <= 0)
    throw ParseError(header_line, "NORB must be positive");
  data.resize(norb);
  data.n_elec = get_int("NELEC", true, 0);
  data.ms2 = get_int("MS2", false, 0);
  if (data.n_elec < 0 || data.n_elec > 2 * norb)
    throw ParseError(header_line, "NELEC out of range for NORB");
  if (auto it = kv.find("ORBSYM"); it != kv.end()) {
    for (const auto &t : it->second) {
      int v = 0;
      if (!parse_int(t, v))
        throw ParseError(header_line, "non-integer ORBSYM entry");
      data.orbsym.push_back(v);
    }
  }

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;)
      toks.push_back(t);
    if (toks.empty())
      continue;
    if (toks.size() != 5)
      throw ParseError(lineno, "expected 'value i j k l'");
    double v = 0.0;
    if (!parse_double(toks[0], v))
      throw ParseError(lineno, "non-numeric integral value '" + toks[0] + "'");
    int idx[4];
    for (int a = 0; a < 4; ++a) {
      if (!parse_int(toks[static_cast<std::size_t>(a) + 1], idx[a]))
        throw ParseError(lineno, "non-integer orbital index");
      if (idx[a] < 0 || idx[a] > norb)
        throw ParseError(lineno, "orbital index " + std::to_string(idx[a]) +
                                     " outside 1.." + std::to_string(norb));
    }
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      data.e_core = v;
    } else if (k == 0 && l == 0) {
      if (i == 0 || j == 0)
        throw ParseError(lineno, "one-electron line needs two nonzero indices");
      data.set_one_body(i - 1, j - 1, v);
    } else if (i == 0 && j == 0 && k != 0 && l == 0) {
      // Orbital energy line written by some programs; not needed.
    } else {
      if (i == 0 || j == 0 || k == 0 || l == 0)
        throw ParseError(lineno, "malformed integral index pattern");
      data.set_two_body(i - 1, j - 1, k - 1, l - 1, v);
    }
  }
  return data;
}

FcidumpData load_fcidump(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::Io, "cannot open FCIDUMP file " + path.string());
  return parse_fcidump(in);
}

} // namespace walshci
