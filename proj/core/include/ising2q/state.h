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

#ifndef ISING2Q_STATE_H_
#define ISING2Q_STATE_H_

#include <array>

#include "ising2q/linalg.h"

namespace ising2q {

/// Pure two-qubit state. Amplitudes are ordered |00>, |01>, |10>, |11>
/// (first index is qubit 1), so that the 2x2 amplitude matrix is
///   A = [[alpha, beta], [gamma, delta]].
class TwoQubitState {
 public:
  TwoQubitState() : amps_(Vector4c::Zero()) { amps_(0) = 1.0; }
  explicit TwoQubitState(const Vector4c& amplitudes) : amps_(amplitudes) {}
  TwoQubitState(Complex alpha, Complex beta, Complex gamma, Complex delta) {
    amps_ << alpha, beta, gamma, delta;
  }

  static TwoQubitState basis(int index);
  /// (|01> + |10>)/sqrt(2).
  static TwoQubitState bell01();
  /// (|01> - |10>)/sqrt(2).
  static TwoQubitState bell10();
  /// chi (x) psi for single-qubit amplitude pairs.
  static TwoQubitState product(const Vector2c& chi, const Vector2c& psi);

  Complex alpha() const { return amps_(0); }
  Complex beta() const { return amps_(1); }
  Complex gamma() const { return amps_(2); }
  Complex delta() const { return amps_(3); }
  Complex operator[](int i) const { return amps_(i); }

  const Vector4c& amplitudes() const { return amps_; }
  Matrix2c amplitude_matrix() const;

  double norm() const { return amps_.norm(); }
  /// Returns this state scaled to unit norm.
  TwoQubitState normalized() const { return TwoQubitState(amps_ / amps_.norm()); }

  /// Throws Error(kInvalidArgument) when | ||psi||^2 - 1 | > tol.
  void require_normalized(const char* where, double tol = 1e-12) const;

  bool operator==(const TwoQubitState&) const = default;

 private:
  Vector4c amps_;
};

/// <a|b>.
Complex inner(const TwoQubitState& a, const TwoQubitState& b);

/// |<a|b>|^2, insensitive to global phase.
double fidelity(const TwoQubitState& a, const TwoQubitState& b);

/// Normalizes a single-qubit amplitude pair; throws on zero vector.
Vector2c normalized_qubit(const Vector2c& q);

}  // namespace ising2q

#endif  // ISING2Q_STATE_H_
