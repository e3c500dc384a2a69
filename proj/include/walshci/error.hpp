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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace walshci {

enum class ErrorKind {
  Parse,
  Index,
  Consistency,
  WidthMismatch,
  Hermiticity,
  ImpossibleOutcome,
  EmptySpace,
  Duplicate,
  Rank,
  Solve,
  Domain,
  Convention,
  DegenerateState,
  ThresholdTooHigh,
  DimensionMismatch,
  EstimationFailure,
  Divergence,
  Config,
  Io,
};

const char *to_string(ErrorKind kind);

/// Base exception for every failure raised by the library. The kind lets
/// callers (the CLI, tests) branch without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error(ErrorKind::Parse,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace walshci
