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

#include "ising2q/control.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "ising2q/error.h"
#include "ising2q/propagator.h"

namespace ising2q {

namespace {

double parity(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

void require_coupling(double J, const char* where) {
  if (!std::isfinite(J) || J == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, std::string(where) + ": J must be finite and nonzero");
  }
}

[[noreturn]] void bad_indices(int n, int m, int s, const char* violated) {
  throw Error(ErrorCode::kInvalidLoopIndices,
              "(n, m, s) = (" + std::to_string(n) + ", " + std::to_string(m) + ", " +
                  std::to_string(s) + ") violates " + violated);
}

}  // namespace

CouplingParams LoopSpec::params() const { return build_params_pm(J, B_plus, B_minus); }

CouplingParams SwapSpec::params() const { return build_params_pm(J, B_plus, B_minus); }

LoopSpec design_loop(int n, int m, int s, double J, int sign) {
  require_coupling(J, "design_loop");
  if (sign != 1 && sign != -1) throw Error(ErrorCode::kInvalidArgument, "design_loop: sign must be +1 or -1");
  const int k = m + s;
  if (!(n > 0)) bad_indices(n, m, s, "0 < n");
  if (J > 0.0) {
    if (!(n < k)) bad_indices(n, m, s, "n < m + s");
    if (!(k <= 2 * n)) bad_indices(n, m, s, "m + s <= 2n");
  } else {
    // T = (m + s - n) pi / 2J > 0 needs m + s < n when J < 0.
    if (!(k >= 0)) bad_indices(n, m, s, "0 <= m + s");
    if (!(k < n)) bad_indices(n, m, s, "m + s < n (required for T > 0 when J < 0)");
  }

  LoopSpec spec;
  spec.n = n;
  spec.m = m;
  spec.s = s;
  spec.sign = sign;
  spec.J = J;
  const double denom = static_cast<double>(k - n);
  spec.B_plus = 2.0 * (s - m) * J / denom;
  spec.B_minus = sign * 2.0 * J * std::sqrt(static_cast<double>(2 * n - k) * k) / denom;
  spec.T = denom * M_PI / (2.0 * J);
  spec.expected_phase = parity(n) * std::exp(-kI * (J * spec.T));
  return spec;
}

SwapSpec design_swap(int n, int m, double J) {
  require_coupling(J, "design_swap");
  const double odd = 2.0 * n + 1.0;
  SwapSpec spec;
  spec.n = n;
  spec.m = m;
  spec.J = J;
  spec.T = odd * M_PI / (4.0 * J);
  if (!(spec.T > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "design_swap: T = (2n + 1) pi / 4J must be positive (n >= 0 for J > 0, n <= -1 for J < 0)");
  }
  spec.B_plus = 8.0 * J * m / odd;
  spec.B_minus = 0.0;
  spec.expected_phase = kI * parity(n) * std::exp(-kI * (J * spec.T));
  return spec;
}

ControlCheck compare_up_to_phase(const Unitary4& U, const Unitary4& V) {
  const Complex tr = (V.matrix().adjoint() * U.matrix()).trace();
  ControlCheck out;
  const double mag = std::abs(tr);
  out.phase = mag > 0.0 ? tr / mag : Complex(1.0, 0.0);
  const double frob = (U.matrix() - out.phase * V.matrix()).norm();
  out.distance = std::min(1.0, frob / std::sqrt(8.0));
  return out;
}

ControlCheck verify_control(const CouplingParams& p, double T, ControlTarget target) {
  const Unitary4 u = propagator(p, T);
  return compare_up_to_phase(u, target == ControlTarget::kIdentity ? Unitary4::identity()
                                                                    : Unitary4::exchange());
}

std::vector<LoopSpec> enumerate_loops(double J, int n_max) {
  require_coupling(J, "enumerate_loops");
  if (n_max < 1) throw Error(ErrorCode::kInvalidArgument, "enumerate_loops: n_max must be >= 1");
  std::vector<LoopSpec> out;
  for (int n = 1; n <= n_max; ++n) {
    const int k_lo = J > 0.0 ? n + 1 : 0;
    const int k_hi = J > 0.0 ? 2 * n : n - 1;
    for (int k = k_lo; k <= k_hi; ++k) {
      for (int m = 0; m <= k; ++m) {
        const int s = k - m;
        if (std::gcd(std::gcd(n, m), s) > 1) continue;
        out.push_back(design_loop(n, m, s, J, 1));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const LoopSpec& a, const LoopSpec& b) {
    return std::tie(a.T, a.n, a.m, a.s) < std::tie(b.T, b.n, b.m, b.s);
  });
  return out;
}

TwoQubitState apply_exchange_demo(const Vector2c& chi, const Vector2c& psi, const SwapSpec& spec) {
  if (std::abs(chi.squaredNorm() - 1.0) > 1e-12 || std::abs(psi.squaredNorm() - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument, "apply_exchange_demo: inputs must be normalized");
  }
  return evolve(TwoQubitState::product(chi, psi), spec.params(), spec.T);
}

}  // namespace ising2q
