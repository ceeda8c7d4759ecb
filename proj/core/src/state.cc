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

#include "ising2q/state.h"

#include <cmath>
#include <string>

#include "ising2q/error.h"
#include "ising2q/unitary.h"

namespace ising2q {

TwoQubitState TwoQubitState::basis(int index) {
  if (index < 0 || index > 3) throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
  Vector4c v = Vector4c::Zero();
  v(index) = 1.0;
  return TwoQubitState(v);
}

TwoQubitState TwoQubitState::bell01() {
  const double h = M_SQRT1_2;
  return TwoQubitState(0.0, h, h, 0.0);
}

TwoQubitState TwoQubitState::bell10() {
  const double h = M_SQRT1_2;
  return TwoQubitState(0.0, h, -h, 0.0);
}

TwoQubitState TwoQubitState::product(const Vector2c& chi, const Vector2c& psi) {
  return TwoQubitState(chi(0) * psi(0), chi(0) * psi(1), chi(1) * psi(0), chi(1) * psi(1));
}

Matrix2c TwoQubitState::amplitude_matrix() const {
  Matrix2c a;
  a << amps_(0), amps_(1), amps_(2), amps_(3);
  return a;
}

void TwoQubitState::require_normalized(const char* where, double tol) const {
  const double n2 = amps_.squaredNorm();
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tol) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(where) + ": state is not normalized (|psi|^2 = " + std::to_string(n2) +
                    ")");
  }
}

Complex inner(const TwoQubitState& a, const TwoQubitState& b) {
  return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const TwoQubitState& a, const TwoQubitState& b) { return std::norm(inner(a, b)); }

Vector2c normalized_qubit(const Vector2c& q) {
  const double n = q.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::kInvalidArgument, "single-qubit amplitudes must be finite and nonzero");
  }
  return q / n;
}

Unitary4 Unitary4::exchange() {
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return Unitary4(m);
}

double Unitary4::unitarity_residual() const {
  return max_abs_diff(m_.adjoint() * m_, Matrix4c::Identity());
}

}  // namespace ising2q
