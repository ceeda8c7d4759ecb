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

#ifndef ISING2Q_TOOLS_CLI_SWEEP_H_
#define ISING2Q_TOOLS_CLI_SWEEP_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ising2q/params.h"

namespace ising2q::cli {

enum class Command {
  kSpectrum,
  kEvolve,
  kEntropySweep,
  kWitness,
  kLoop,
  kSwap,
  kPeriodicity,
  kFigure,
};

/// Bad flag combinations or out-of-range values. Maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything a single invocation needs. Unset optionals take the
/// per-command defaults documented in the tool's --help.
struct SweepRequest {
  Command command = Command::kSpectrum;

  double J = 1.0;
  std::optional<double> B1;
  std::optional<double> B2;
  std::optional<double> B_plus;
  std::optional<double> B_minus;

  std::optional<double> t_max;
  std::optional<int> steps;
  std::optional<double> theta;
  std::optional<double> p;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> s;
  int sign = 1;
  int figure = 0;
  std::uint64_t seed = 1;
  int precision = 12;

  /// entropy-sweep: one trace per listed field difference.
  std::vector<double> b_minus_list;
  /// spectrum: half-width of the field grid.
  double b_max = 4.0;
  /// evolve / entropy-sweep / witness initial state: 00, 01, 10, 11,
  /// bell01, bell10, theta (uses `theta`) or random (product state from `seed`).
  std::string state = "01";

  /// periodicity: F(r, phi, jn, t').
  double r = 1.0;
  double phi = 0.0;
  std::optional<double> jn;
  bool roots = false;

  /// loop: enumerate every primitive loop up to this order instead of
  /// designing one from n, m, s.
  int n_max = 0;
};

/// Throws UsageError describing the first problem found.
void validate(const SweepRequest& request);

/// Coupling parameters from whichever field style the request uses.
CouplingParams request_params(const SweepRequest& request);

/// Runs the request and returns the CSV document.
std::string run(const SweepRequest& request);

/// Data behind figure `id` in 1..6. Fields of `overrides` that are set
/// replace the figure defaults where the figure uses them.
std::string figure_dataset(int id, const SweepRequest& overrides);

}  // namespace ising2q::cli

#endif  // ISING2Q_TOOLS_CLI_SWEEP_H_
