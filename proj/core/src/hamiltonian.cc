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

#include "ising2q/hamiltonian.h"

#include <cmath>

namespace ising2q {

Matrix4c hamiltonian(const CouplingParams& p) {
  const double J = p.J;
  Matrix4c h = Matrix4c::Zero();
  h(0, 0) = p.B_plus - J;
  h(1, 1) = p.B_minus + J;
  h(2, 2) = -p.B_minus + J;
  h(3, 3) = -p.B_plus - J;
  h(1, 2) = -2.0 * J;
  h(2, 1) = -2.0 * J;
  return h;
}

Matrix4c spin_dot_operator() {
  Matrix4c s = Matrix4c::Zero();
  s(0, 0) = 1.0;
  s(1, 1) = -1.0;
  s(2, 2) = -1.0;
  s(3, 3) = 1.0;
  s(1, 2) = 2.0;
  s(2, 1) = 2.0;
  return s;
}

SpectralData spectrum(const CouplingParams& p) {
  require_nondegenerate(p, "spectrum");
  SpectralData out;
  out.energies = {-p.J - p.B_plus, -p.J + p.B_plus, p.J - p.R, p.J + p.R};

  // sqrt(2) j / sqrt(1 +- b-) = sgn(j) sqrt(1 -+ b-) / sqrt(2), using
  // (1 + b-)(1 - b-) = 4 j^2. This form stays finite as j -> 0.
  const double sgn = p.J < 0.0 ? -1.0 : 1.0;
  const double wp = std::sqrt(p.one_plus_b_minus() / 2.0);
  const double wm = std::sqrt(p.one_minus_b_minus() / 2.0);
  out.vectors[0] = TwoQubitState::basis(3);
  out.vectors[1] = TwoQubitState::basis(0);
  out.vectors[2] = TwoQubitState(0.0, sgn * wm, wp, 0.0);
  out.vectors[3] = TwoQubitState(0.0, wp, -sgn * wm, 0.0);
  return out;
}

}  // namespace ising2q
