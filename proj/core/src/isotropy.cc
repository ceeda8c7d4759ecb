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

#include "ising2q/isotropy.h"

#include <cmath>

#include "ising2q/error.h"

namespace ising2q {

namespace {

constexpr double kIsotropyTol = 1e-9;

}  // namespace

IsotropyResult isotropy_check(const Matrix3c& g1, const Matrix3c& g2, const Vector3d& r_hat) {
  if (!r_hat.allFinite() || std::abs(r_hat.norm() - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument, "isotropy_check: r_hat must be a unit vector");
  }
  const Eigen::Vector3cd r = r_hat.cast<Complex>();
  const Eigen::Vector3cd a = g1.transpose() * r;
  const Eigen::Vector3cd b = g2.transpose() * r;

  IsotropyResult out;
  out.J_matrix = -(g1.transpose() * g2 - 3.0 * a * b.transpose());

  const Matrix3c& jm = out.J_matrix;
  bool iso = jm.imag().cwiseAbs().maxCoeff() < kIsotropyTol;
  for (int r0 = 0; r0 < 3 && iso; ++r0) {
    for (int c0 = 0; c0 < 3; ++c0) {
      if (r0 != c0 && std::abs(jm(r0, c0)) >= kIsotropyTol) {
        iso = false;
        break;
      }
    }
  }
  const double d0 = jm(0, 0).real();
  iso = iso && std::abs(jm(1, 1).real() - d0) < kIsotropyTol &&
        std::abs(jm(2, 2).real() - d0) < kIsotropyTol;
  out.is_isotropic = iso;
  if (iso) out.J_scalar = jm.diagonal().real().mean();
  return out;
}

IsotropyResult isotropy_check(const Matrix3d& g1, const Matrix3d& g2, const Vector3d& r_hat) {
  return isotropy_check(Matrix3c(g1.cast<Complex>()), Matrix3c(g2.cast<Complex>()), r_hat);
}

}  // namespace ising2q
