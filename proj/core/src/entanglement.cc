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

#include "ising2q/entanglement.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ising2q/error.h"
#include "ising2q/propagator.h"

namespace ising2q {

double binary_entropy(double l) {
  auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
  return term(l) + term(1.0 - l);
}

SchmidtData schmidt(const TwoQubitState& s) {
  SchmidtData out;
  out.delta = std::min(0.5, std::abs(s.alpha() * s.delta() - s.beta() * s.gamma()));
  const double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * out.delta * out.delta));
  out.lambda1 = 0.5 * (1.0 + disc);
  // lambda1 lambda2 = delta^2; avoids cancellation in (1 - disc) / 2.
  out.lambda2 = out.delta * out.delta / out.lambda1;
  out.entropy = binary_entropy(out.lambda2);
  return out;
}

MaxEntanglementTimes max_entanglement_times(const CouplingParams& p) {
  if (p.J == 0.0) {
    throw Error(ErrorCode::kNoEntanglementGeneration,
                "max_entanglement_times: J = 0 leaves |01> and |10> unentangled");
  }
  MaxEntanglementTimes out;
  out.period = 2.0 * M_PI / p.R;
  double ratio = p.B_minus * p.B_minus / (4.0 * p.J * p.J);
  if (std::abs(ratio - 1.0) <= 1e-12) {
    ratio = 1.0;
    out.two_touch = true;
  }
  if (ratio <= 1.0) {
    out.attainable = true;
    out.t_a = std::acos(-ratio) / (2.0 * p.R);
    out.t_b = M_PI / p.R - out.t_a;
    if (out.two_touch) out.t_b = out.t_a;
    out.max_entropy = 1.0;
  } else {
    // sin^2 t' = 1 maximizes 4j^2 sin^2 t' (1 - 4j^2 sin^2 t') on x < 1/2.
    out.t_a = out.t_b = M_PI / (2.0 * p.R);
    out.max_entropy = binary_entropy(4.0 * p.j * p.j);
  }
  return out;
}

TwoQubitState max_entangled_result_state(const CouplingParams& p, SeedState which, Branch branch) {
  const MaxEntanglementTimes times = max_entanglement_times(p);
  if (!times.attainable) {
    throw Error(ErrorCode::kNotAttainable,
                "max_entangled_result_state: B-^2 > 4J^2, maximal entanglement is never reached");
  }
  const double t = branch == Branch::kA ? times.t_a : times.t_b;
  const double sgn_j = p.J < 0.0 ? -1.0 : 1.0;
  const double sgn_tan = std::tan(p.R * t) < 0.0 ? -1.0 : 1.0;
  const double root = std::sqrt(std::max(0.0, 4.0 * p.J * p.J - p.B_minus * p.B_minus));
  // Relative phase between the two components. The quadrant comes from the
  // signs of cos and sin of the phase separately, not from arctan alone.
  const double y = -sgn_j * sgn_tan * root;
  const double x = (which == SeedState::k01 ? -1.0 : 1.0) * sgn_j * p.B_minus;
  const Complex rel = std::exp(kI * std::atan2(y, x));
  const double h = M_SQRT1_2;
  if (which == SeedState::k01) return TwoQubitState(0.0, h * rel, h, 0.0);
  return TwoQubitState(0.0, h, h * rel, 0.0);
}

TwoQubitState theta_family_state(double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return TwoQubitState(0.0, M_SQRT1_2 * (s - c), M_SQRT1_2 * (s + c), 0.0);
}

SchmidtData theta_family_schmidt(double theta, const CouplingParams& p, double t) {
  return schmidt(evolve(theta_family_state(theta), p, t));
}

SchmidtData theta_family_schmidt_formula(double theta, double j, double t_prime) {
  const double st = std::sin(t_prime);
  const double sth = std::sin(theta);
  const double s2th = std::sin(2.0 * theta);
  const double rad = 16.0 * j * j * (1.0 - 4.0 * j * j) * std::pow(st, 4) * std::pow(sth, 4) +
                     s2th * s2th *
                         (std::pow(std::sin(2.0 * j * t_prime), 2) +
                          4.0 * j * j * st * st * std::cos(4.0 * j * t_prime) -
                          j * std::sin(4.0 * j * t_prime));
  SchmidtData out;
  if (!(rad >= 0.0 && rad <= 1.0)) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.lambda1 = out.lambda2 = out.delta = out.entropy = nan;
    return out;
  }
  const double root = std::sqrt(rad);
  out.lambda1 = 0.5 * (1.0 + root);
  out.lambda2 = 0.5 * (1.0 - root);
  out.delta = std::sqrt(out.lambda1 * out.lambda2);
  out.entropy = binary_entropy(out.lambda2);
  return out;
}

}  // namespace ising2q
