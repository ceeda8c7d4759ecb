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

#ifndef ISING2Q_WITNESS_H_
#define ISING2Q_WITNESS_H_

#include <array>
#include <cstdint>
#include <vector>

#include "ising2q/linalg.h"
#include "ising2q/params.h"
#include "ising2q/state.h"

namespace ising2q {

/// <s|op|s> without discarding the imaginary part.
Complex expectation(const Matrix4c& op, const TwoQubitState& s);

double energy_expectation(const TwoQubitState& s, const CouplingParams& p);

/// <sigma_1 . sigma_2>, in [-3, 1] for any state and [-1, 1] for product states.
double spin_dot_expectation(const TwoQubitState& s);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double v, double tol = 0.0) const { return v >= lo - tol && v <= hi + tol; }
};

/// Exact range of <H> over product states.
///
/// With Bloch vectors n1, n2 the product-state energy is
/// -J n1.n2 + B1 z1 + B2 z2. Optimizing the second spin in closed form leaves
/// g(c) = B1 c +- sqrt(B2^2 + J^2 - 2 B2 J c) on c = z1 in [-1, 1], which is
/// concave (max) or convex (min), so the extremum is at an endpoint or at the
/// single stationary point.
Interval separable_energy_bounds(const CouplingParams& p);

/// M = max{|J| + |B-|, |B+|}. This symmetric bound is tight in zero field,
/// where it gives [-|J|, |J|], but product states can leave [-M, M] once a
/// field is applied (|11> has energy -J - B+). Use
/// `separable_energy_bounds` for witness decisions.
double symmetric_energy_bound(const CouplingParams& p);

/// f(x, y) = 2 (x sqrt(1-y^2) + y sqrt(1-x^2))^2 + b1 (2x^2 - 1) + b2 (2y^2 - 1)
/// on [0, 1]^2: the reduced real-amplitude form of a product-state
/// expectation.
double product_range_function(double x, double y, double beta1, double beta2);

struct ProductRangeExtrema {
  /// {-b+, 2 - b-, 2 + b-, b+} with b+- = (beta1 +- beta2) / 2, sorted.
  std::array<double, 4> candidates{};
  /// f at the four corners of [0, 1]^2, sorted.
  std::array<double, 4> corner_values{};
  /// Dense-grid min and max of f.
  double grid_min = 0.0;
  double grid_max = 0.0;
};

ProductRangeExtrema product_range_extrema(double beta1, double beta2, int grid_points = 400);

/// U^dagger(t) (sigma_1 . sigma_2) U(t) in closed form. Only the central
/// block moves:
///   (01,01), (10,10):  -(1 +- 8 j b- sin^2 t')
///   (01,10):            2 (1 - 2 b-^2 sin^2 t' + i b- sin 2t')
/// Throws Error(kDegenerateParameters) when R = 0.
Matrix4c spin_dot_heisenberg(const CouplingParams& p, double t);

enum class Observable { kEnergy, kSpinDot };
enum class Verdict { kEntangled, kInconclusive };

struct WitnessVerdict {
  double value = 0.0;
  double separable_lo = 0.0;
  double separable_hi = 0.0;
  Verdict verdict = Verdict::kInconclusive;
};

/// Margin by which a value must leave the separable interval to count.
inline constexpr double kWitnessMargin = 1e-9;

WitnessVerdict witness_verdict(const TwoQubitState& s, const CouplingParams& p,
                               Observable observable);

/// Haar-random single-qubit states, tensored. Deterministic for a fixed seed.
std::vector<TwoQubitState> sample_product_states(std::uint64_t seed, int count);

}  // namespace ising2q

#endif  // ISING2Q_WITNESS_H_
