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

#include "ising2q/witness.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "ising2q/error.h"
#include "ising2q/hamiltonian.h"

namespace ising2q {

Complex expectation(const Matrix4c& op, const TwoQubitState& s) {
  return s.amplitudes().dot(op * s.amplitudes());
}

double energy_expectation(const TwoQubitState& s, const CouplingParams& p) {
  return expectation(hamiltonian(p), s).real();
}

double spin_dot_expectation(const TwoQubitState& s) {
  return expectation(spin_dot_operator(), s).real();
}

Interval separable_energy_bounds(const CouplingParams& p) {
  const double J = p.J;
  const double B1 = p.B1;
  const double B2 = p.B2;
  const double A = B2 * B2 + J * J;
  const double K = 2.0 * B2 * J;
  auto radius = [&](double c) { return std::sqrt(std::max(0.0, A - K * c)); };

  double candidates[3] = {-1.0, 1.0, 1.0};
  int count = 2;
  if (B1 != 0.0 && K != 0.0) {
    const double q = B2 * J / B1;
    candidates[count++] = std::clamp((A - q * q) / K, -1.0, 1.0);
  }
  Interval out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (int i = 0; i < count; ++i) {
    const double c = candidates[i];
    out.hi = std::max(out.hi, B1 * c + radius(c));
    out.lo = std::min(out.lo, B1 * c - radius(c));
  }
  return out;
}

double symmetric_energy_bound(const CouplingParams& p) {
  return std::max(std::abs(p.J) + std::abs(p.B_minus), std::abs(p.B_plus));
}

double product_range_function(double x, double y, double beta1, double beta2) {
  const double mix = x * std::sqrt(std::max(0.0, 1.0 - y * y)) +
                     y * std::sqrt(std::max(0.0, 1.0 - x * x));
  return 2.0 * mix * mix + beta1 * (2.0 * x * x - 1.0) + beta2 * (2.0 * y * y - 1.0);
}

ProductRangeExtrema product_range_extrema(double beta1, double beta2, int grid_points) {
  if (!std::isfinite(beta1) || !std::isfinite(beta2)) {
    throw Error(ErrorCode::kInvalidArgument, "product_range_extrema: non-finite field");
  }
  if (grid_points < 2) {
    throw Error(ErrorCode::kInvalidArgument, "product_range_extrema: need at least 2 grid points");
  }
  ProductRangeExtrema out;
  const double bp = 0.5 * (beta1 + beta2);
  const double bm = 0.5 * (beta1 - beta2);
  out.candidates = {-bp, 2.0 - bm, 2.0 + bm, bp};
  std::sort(out.candidates.begin(), out.candidates.end());
  out.corner_values = {product_range_function(0, 0, beta1, beta2),
                       product_range_function(0, 1, beta1, beta2),
                       product_range_function(1, 0, beta1, beta2),
                       product_range_function(1, 1, beta1, beta2)};
  std::sort(out.corner_values.begin(), out.corner_values.end());

  out.grid_min = std::numeric_limits<double>::infinity();
  out.grid_max = -std::numeric_limits<double>::infinity();
  const double h = 1.0 / (grid_points - 1);
  for (int a = 0; a < grid_points; ++a) {
    for (int b = 0; b < grid_points; ++b) {
      const double f = product_range_function(a * h, b * h, beta1, beta2);
      out.grid_min = std::min(out.grid_min, f);
      out.grid_max = std::max(out.grid_max, f);
    }
  }
  return out;
}

Matrix4c spin_dot_heisenberg(const CouplingParams& p, double t) {
  require_nondegenerate(p, "spin_dot_heisenberg");
  const double tp = p.normalized_time(t);
  const double s = std::sin(tp);
  const double s2 = s * s;
  const double jb = 8.0 * p.j * p.b_minus * s2;
  const double bm = p.b_minus;

  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = 1.0;
  m(3, 3) = 1.0;
  m(1, 1) = -(1.0 + jb);
  m(2, 2) = -(1.0 - jb);
  m(1, 2) = 2.0 * Complex(1.0 - 2.0 * bm * bm * s2, bm * std::sin(2.0 * tp));
  m(2, 1) = std::conj(m(1, 2));
  return m;
}

WitnessVerdict witness_verdict(const TwoQubitState& s, const CouplingParams& p,
                               Observable observable) {
  s.require_normalized("witness_verdict");
  WitnessVerdict out;
  if (observable == Observable::kEnergy) {
    out.value = energy_expectation(s, p);
    const Interval range = separable_energy_bounds(p);
    out.separable_lo = range.lo;
    out.separable_hi = range.hi;
  } else {
    out.value = spin_dot_expectation(s);
    out.separable_lo = -1.0;
    out.separable_hi = 1.0;
  }
  const bool outside = out.value < out.separable_lo - kWitnessMargin ||
                       out.value > out.separable_hi + kWitnessMargin;
  out.verdict = outside ? Verdict::kEntangled : Verdict::kInconclusive;
  return out;
}

std::vector<TwoQubitState> sample_product_states(std::uint64_t seed, int count) {
  if (count <= 0) throw Error(ErrorCode::kInvalidArgument, "sample_product_states: count must be > 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto qubit = [&] {
    Vector2c q;
    for (int k = 0; k < 2; ++k) {
      const double re = normal(rng);
      const double im = normal(rng);
      q(k) = Complex(re, im);
    }
    return Vector2c(q / q.norm());
  };
  std::vector<TwoQubitState> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const Vector2c chi = qubit();
    const Vector2c psi = qubit();
    out.push_back(TwoQubitState::product(chi, psi));
  }
  return out;
}

}  // namespace ising2q
