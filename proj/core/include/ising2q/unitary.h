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

#ifndef ISING2Q_UNITARY_H_
#define ISING2Q_UNITARY_H_

#include "ising2q/linalg.h"
#include "ising2q/state.h"

namespace ising2q {

/// 4x4 complex matrix expected to satisfy U^dagger U = I. The constructor does
/// not check; call `unitarity_residual()` where the contract matters.
class Unitary4 {
 public:
  Unitary4() : m_(Matrix4c::Identity()) {}
  explicit Unitary4(const Matrix4c& m) : m_(m) {}

  static Unitary4 identity() { return Unitary4(); }
  /// The qubit exchange operator |ab> -> |ba>.
  static Unitary4 exchange();

  const Matrix4c& matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

  Unitary4 adjoint() const { return Unitary4(m_.adjoint()); }
  Unitary4 operator*(const Unitary4& o) const { return Unitary4(m_ * o.m_); }
  TwoQubitState operator*(const TwoQubitState& s) const {
    return TwoQubitState(Vector4c(m_ * s.amplitudes()));
  }

  /// max_ij |(U^dagger U - I)_ij|.
  double unitarity_residual() const;

 private:
  Matrix4c m_;
};

}  // namespace ising2q

#endif  // ISING2Q_UNITARY_H_
