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

#ifndef ISING2Q_LINALG_H_
#define ISING2Q_LINALG_H_

#include <complex>

#include <Eigen/Dense>

namespace ising2q {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix3c = Eigen::Matrix3cd;
using Matrix3d = Eigen::Matrix3d;
using Matrix4c = Eigen::Matrix4cd;
using Vector2c = Eigen::Vector2cd;
using Vector3d = Eigen::Vector3d;
using Vector4c = Eigen::Vector4cd;

inline constexpr Complex kI{0.0, 1.0};

/// Largest elementwise modulus of `a - b`.
template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace ising2q

#endif  // ISING2Q_LINALG_H_
