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

#ifndef ISING2Q_ENTANGLEMENT_H_
#define ISING2Q_ENTANGLEMENT_H_

#include "ising2q/params.h"
#include "ising2q/state.h"

namespace ising2q {

/// Schmidt data of a pure two-qubit state.
///
/// delta = |det A| in [0, 1/2], lambda_{1,2} = (1 +- sqrt(1 - 4 delta^2)) / 2
/// (the eigenvalues of A A^dagger), entropy in bits with 0 log 0 = 0.
struct SchmidtData {
  double lambda1 = 1.0;
  double lambda2 = 0.0;
  double delta = 0.0;
  double entropy = 0.0;
};

SchmidtData schmidt(const TwoQubitState& s);

/// Binary entropy -l log2 l - (1-l) log2 (1-l).
double binary_entropy(double l);

/// Times at which U(t)|01> (equivalently |10>) is maximally entangled:
///
///   t_a = arccos(-B-^2 / 4J^2) / (2R),   t_b = pi/R - t_a,   period = 2 pi / R,
///
/// repeating every pi/R. Reachable only when B-^2 <= 4 J^2. Otherwise
/// `attainable` is false, t_a = t_b = pi / (2R) is where the entropy peaks and
/// `max_entropy` is that supremum (lambda_2 = 4 j^2).
struct MaxEntanglementTimes {
  double t_a = 0.0;
  double t_b = 0.0;
  double period = 0.0;
  bool attainable = false;
  /// B-^2 = 4J^2: t_a = t_b and the maximum is touched twice per period.
  bool two_touch = false;
  double max_entropy = 0.0;
};

/// Throws Error(kNoEntanglementGeneration) when J = 0.
MaxEntanglementTimes max_entanglement_times(const CouplingParams& p);

enum class SeedState { k01, k10 };
enum class Branch { kA, kB };

/// Closed form of U(t_branch)|which> up to global phase:
///   |01> -> (e^{i phi} |01> + |10>) / sqrt(2),
///   |10> -> (e^{i phi'} |10> + |01>) / sqrt(2),
/// with the relative phase taken in the correct quadrant.
/// Throws Error(kNotAttainable) when B-^2 > 4 J^2.
TwoQubitState max_entangled_result_state(const CouplingParams& p, SeedState which, Branch branch);

/// sin(theta) |beta01> - cos(theta) |beta10>.
TwoQubitState theta_family_state(double theta);

/// Schmidt data of the evolved theta-family state, computed by evolving and
/// decomposing (no shortcut formula).
SchmidtData theta_family_schmidt(double theta, const CouplingParams& p, double t);

/// The printed closed-form Schmidt coefficients for the theta family in terms
/// of (theta, j, t'). Kept for side-by-side comparison only: it does not agree
/// with the evolution (it gives lambda = 1/2 at t' = 0 for every theta).
/// Fields are NaN where the printed radicand leaves [0, 1].
SchmidtData theta_family_schmidt_formula(double theta, double j, double t_prime);

}  // namespace ising2q

#endif  // ISING2Q_ENTANGLEMENT_H_
