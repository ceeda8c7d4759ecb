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

#ifndef ISING2Q_TESTS_SUPPORT_ORACLES_H_
#define ISING2Q_TESTS_SUPPORT_ORACLES_H_

// Test-only reference computations. Nothing here calls the closed forms
// under test.

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "ising2q/linalg.h"
#include "ising2q/params.h"
#include "ising2q/state.h"

namespace ising2q::testing {

/// Random parameters with J in [-2, 2], B1, B2 in [-4, 4].
inline CouplingParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uj(-2.0, 2.0);
  std::uniform_real_distribution<double> ub(-4.0, 4.0);
  const double J = uj(rng);
  const double B1 = ub(rng);
  const double B2 = ub(rng);
  return build_params(J, B1, B2);
}

inline TwoQubitState random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vector4c v;
  for (int i = 0; i < 4; ++i) {
    const double re = n(rng);
    const double im = n(rng);
    v(i) = Complex(re, im);
  }
  return TwoQubitState(Vector4c(v / v.norm()));
}

inline Vector2c random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vector2c v;
  for (int i = 0; i < 2; ++i) {
    const double re = n(rng);
    const double im = n(rng);
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

/// Pauli-sum construction of -J s1.s2 + B1 Z1 + B2 Z2 via Kronecker products.
inline Matrix4c hamiltonian_from_paulis(double J, double B1, double B2) {
  Matrix2c x, y, z, id;
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  id = Matrix2c::Identity();
  auto kron = [](const Matrix2c& a, const Matrix2c& b) {
    Matrix4c k;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return k;
  };
  return -J * (kron(x, x) + kron(y, y) + kron(z, z)) + B1 * kron(z, id) + B2 * kron(id, z);
}

/// Schmidt coefficients from the singular values of the amplitude matrix.
inline std::pair<double, double> schmidt_by_svd(const TwoQubitState& s) {
  Eigen::JacobiSVD<Matrix2c> svd(s.amplitude_matrix());
  const auto sv = svd.singularValues();
  return {sv(0) * sv(0), sv(1) * sv(1)};
}

/// exp(-i H t) by scaling-and-squaring of a Taylor series.
inline Matrix4c expm_taylor(const Matrix4c& h, double t) {
  const Matrix4c a = Complex(0, -t) * h;
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  double scaled = norm;
  while (scaled > 0.25) {
    scaled *= 0.5;
    ++squarings;
  }
  const Matrix4c b = a / std::pow(2.0, squarings);
  Matrix4c term = Matrix4c::Identity();
  Matrix4c sum = Matrix4c::Identity();
  for (int k = 1; k < 30; ++k) {
    term = term * b / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace ising2q::testing

#endif  // ISING2Q_TESTS_SUPPORT_ORACLES_H_
