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

#include "ising2q/propagator.h"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "ising2q/error.h"
#include "ising2q/hamiltonian.h"

namespace ising2q {

Unitary4 propagator_closed_form(const CouplingParams& p, double t) {
  require_nondegenerate(p, "propagator_closed_form");
  if (!std::isfinite(t)) throw Error(ErrorCode::kInvalidArgument, "propagator: t must be finite");
  const double tp = p.normalized_time(t);
  const double j = p.j;
  const double c = std::cos(tp);
  const double s = std::sin(tp);
  const Complex ph = std::exp(-kI * (j * tp));

  Matrix4c u = Matrix4c::Zero();
  u(0, 0) = std::exp(-kI * (tp * (p.b_plus - j)));
  u(1, 1) = ph * Complex(c, -p.b_minus * s);
  u(1, 2) = ph * Complex(0.0, 2.0 * j * s);
  u(2, 1) = u(1, 2);
  u(2, 2) = ph * Complex(c, p.b_minus * s);
  u(3, 3) = std::exp(kI * (tp * (p.b_plus + j)));
  return Unitary4(u);
}

Unitary4 propagator_oracle(const CouplingParams& p, double t) {
  require_nondegenerate(p, "propagator_oracle");
  if (!std::isfinite(t)) throw Error(ErrorCode::kInvalidArgument, "propagator: t must be finite");
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(hamiltonian(p));
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::kNumericFailure, "propagator_oracle: eigendecomposition failed");
  }
  Vector4c phases;
  for (int i = 0; i < 4; ++i) phases(i) = std::exp(-kI * (es.eigenvalues()(i) * t));
  const Matrix4c& v = es.eigenvectors();
  return Unitary4(v * phases.asDiagonal() * v.adjoint());
}

Unitary4 propagator(const CouplingParams& p, double t) {
  if (!p.degenerate) return propagator_closed_form(p, t);
  const Matrix4c h = hamiltonian(p);
  Matrix4c u = Matrix4c::Zero();
  for (int i = 0; i < 4; ++i) u(i, i) = std::exp(-kI * (h(i, i).real() * t));
  return Unitary4(u);
}

TwoQubitState evolve(const TwoQubitState& s, const CouplingParams& p, double t) {
  s.require_normalized("evolve");
  if (!std::isfinite(t)) throw Error(ErrorCode::kInvalidArgument, "evolve: t must be finite");
  return propagator(p, t) * s;
}

}  // namespace ising2q
