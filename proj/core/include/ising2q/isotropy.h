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

#ifndef ISING2Q_ISOTROPY_H_
#define ISING2Q_ISOTROPY_H_

#include "ising2q/linalg.h"

namespace ising2q {

struct IsotropyResult {
  /// Exchange tensor J_jl in units of mu0 / (4 pi r^3). Complex because
  /// admissible g tensors may have imaginary entries; real inputs give a real
  /// tensor.
  Matrix3c J_matrix;
  bool is_isotropic = false;
  /// Mean of the diagonal when isotropic, otherwise 0.
  double J_scalar = 0.0;
};

/// Contracts two magnetic g tensors through the dipolar kernel,
///
///   J_jl = -( sum_i g1_ij g2_il - 3 sum_ik g1_ij g2_kl r_i r_k ),
///
/// so that the dipole energy reads -J_jl s1_j s2_l, and reports whether the
/// result is a multiple of the identity (off-diagonals and imaginary parts
/// below 1e-9, diagonals equal within 1e-9).
///
/// Throws Error(kInvalidArgument) if |r_hat| differs from 1 by more than 1e-12.
IsotropyResult isotropy_check(const Matrix3d& g1, const Matrix3d& g2, const Vector3d& r_hat);
IsotropyResult isotropy_check(const Matrix3c& g1, const Matrix3c& g2, const Vector3d& r_hat);

}  // namespace ising2q

#endif  // ISING2Q_ISOTROPY_H_
