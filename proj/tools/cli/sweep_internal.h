// Copyright 2026 The ising2q Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISING2Q_TOOLS_CLI_SWEEP_INTERNAL_H_
#define ISING2Q_TOOLS_CLI_SWEEP_INTERNAL_H_

#include <array>

#include "ising2q/params.h"

namespace ising2q::cli {

/// i-th of n evenly spaced points on [lo, hi]; the last one is exactly hi.
double grid_point(double lo, double hi, int n, int i);

/// E1..E4 in the library's labeling, also defined when R = 0.
std::array<double, 4> spectrum_energies(const CouplingParams& p);

}  // namespace ising2q::cli

#endif  // ISING2Q_TOOLS_CLI_SWEEP_INTERNAL_H_
