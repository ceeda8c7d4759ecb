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

#ifndef ISING2Q_CONTROL_H_
#define ISING2Q_CONTROL_H_

#include <vector>

#include "ising2q/linalg.h"
#include "ising2q/params.h"
#include "ising2q/state.h"
#include "ising2q/unitary.h"

namespace ising2q {

/// Evolution loop: field settings for which U(T) = (-1)^n e^{-iJT} I.
///
///   B+ = 2 (s - m) J / (m + s - n)
///   B- = sign 2 J sqrt((2n - m - s)(m + s)) / (m + s - n)
///   T  = (m + s - n) pi / (2J),      R T = n pi.
///
/// For J > 0 the admissible indices are 0 < n < m + s <= 2n. For J < 0 the
/// requirement T > 0 turns this into 0 <= m + s < n.
struct LoopSpec {
  int n = 1;
  int m = 1;
  int s = 1;
  int sign = 1;
  double J = 1.0;
  double B_plus = 0.0;
  double B_minus = 0.0;
  double T = 0.0;
  Complex expected_phase{1.0, 0.0};

  CouplingParams params() const;
};

/// Exchange: homogeneous field with U(T) = i (-1)^n e^{-iJT} I_{1<->2}.
///
///   B+ = 8 J m / (2n + 1),  B- = 0,  T = (2n + 1) pi / (4J).
///
/// T > 0 is required, so n >= 0 for J > 0 and n <= -1 for J < 0.
struct SwapSpec {
  int n = 0;
  int m = 0;
  double J = 1.0;
  double B_plus = 0.0;
  double B_minus = 0.0;
  double T = 0.0;
  Complex expected_phase{1.0, 0.0};

  CouplingParams params() const;
};

/// Throws Error(kInvalidLoopIndices) naming the violated inequality, or
/// Error(kInvalidArgument) for J = 0, |sign| != 1 or non-finite J.
LoopSpec design_loop(int n, int m, int s, double J, int sign = 1);

/// Throws Error(kInvalidArgument) for J = 0 or when T would not be positive.
SwapSpec design_swap(int n, int m, double J);

enum class ControlTarget { kIdentity, kExchange };

struct ControlCheck {
  /// sqrt(1 - |tr(U^dagger V)| / 4); zero iff U = e^{i phi} V.
  double distance = 1.0;
  /// e^{i phi} with U(T) ~ e^{i phi} V.
  Complex phase{1.0, 0.0};
};

/// Phase-invariant comparison of U(T) against the target. The distance is
/// evaluated as ||U - e^{i phi} V||_F / sqrt(8), which equals the trace form
/// for unitaries but does not lose precision near zero.
ControlCheck verify_control(const CouplingParams& p, double T, ControlTarget target);

/// Same comparison for arbitrary unitaries.
ControlCheck compare_up_to_phase(const Unitary4& U, const Unitary4& V);

/// All primitive loops with 1 <= n <= n_max and m, s >= 0 (sign +1). Index
/// triples sharing a common factor p > 1 repeat a smaller loop with T -> pT and
/// are omitted. Sorted by T, then (n, m, s).
std::vector<LoopSpec> enumerate_loops(double J, int n_max);

/// Evolves chi (x) psi for one exchange period. Ideally the result equals
/// e^{i phi} psi (x) chi.
TwoQubitState apply_exchange_demo(const Vector2c& chi, const Vector2c& psi, const SwapSpec& spec);

}  // namespace ising2q

#endif  // ISING2Q_CONTROL_H_
