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

#include "walshci/error.hpp"

namespace walshci {

const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Parse:
    return "parse";
  case ErrorKind::Index:
    return "index";
  case ErrorKind::Consistency:
    return "consistency";
  case ErrorKind::WidthMismatch:
    return "width-mismatch";
  case ErrorKind::Hermiticity:
    return "hermiticity";
  case ErrorKind::ImpossibleOutcome:
    return "impossible-outcome";
  case ErrorKind::EmptySpace:
    return "empty-space";
  case ErrorKind::Duplicate:
    return "duplicate";
  case ErrorKind::Rank:
    return "rank";
  case ErrorKind::Solve:
    return "solve";
  case ErrorKind::Domain:
    return "domain";
  case ErrorKind::Convention:
    return "convention";
  case ErrorKind::DegenerateState:
    return "degenerate-state";
  case ErrorKind::ThresholdTooHigh:
    return "threshold-too-high";
  case ErrorKind::DimensionMismatch:
    return "dimension-mismatch";
  case ErrorKind::EstimationFailure:
    return "estimation-failure";
  case ErrorKind::Divergence:
    return "divergence";
  case ErrorKind::Config:
    return "config";
  case ErrorKind::Io:
    return "io";
  }
  return "unknown";
}

} // namespace walshci
