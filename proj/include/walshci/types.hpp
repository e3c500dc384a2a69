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

#include <complex>
#include <cstdint>

namespace walshci {

using cplx = std::complex<double>;

/// Occupation / basis-state bit pattern. Qubit q is bit q.
using Bits = std::uint64_t;

inline int popcount(Bits b) noexcept { return __builtin_popcountll(b); }
inline int parity(Bits b) noexcept { return __builtin_parityll(b); }

} // namespace walshci
