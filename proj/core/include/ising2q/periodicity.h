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

#ifndef ISING2Q_PERIODICITY_H_
#define ISING2Q_PERIODICITY_H_

#include <vector>

#include "ising2q/linalg.h"
#include "ising2q/params.h"
#include "ising2q/state.h"

namespace ising2q {

/// Parameterization of a state with gamma != 0 by beta = gamma r e^{i phi},
/// plus the normalized coupling j with b-(j) = sqrt(1 - 4 j^2).
struct PolarCoupling {
  double r = 0.0;
  double phi = 0.0;
  double j = 0.25;

  double b_minus() const;
};

/// Amplitudes of U(t)|s> written out component by component:
///
///   alpha(t') = alpha e^{-i(b+ - j)t'}
///   beta(t')  = e^{-ijt'} (beta (cos t' - i b- sin t') + 2ij gamma sin t')
///   gamma(t') = e^{-ijt'} (2ij beta sin t' + gamma (cos t' + i b- sin t'))
///   delta(t') = delta e^{i(b+ + j)t'}
///
/// Throws Error(kDegenerateParameters) when R = 0.
TwoQubitState amplitude_evolution(const TwoQubitState& s, const CouplingParams& p, double t);

/// Delta(t') = alpha(t') delta(t') - beta(t') gamma(t'); zero iff the evolved
/// state is a product state.
Complex delta_t(const TwoQubitState& s, const CouplingParams& p, double t);

/// Expanded form of Delta(t') in the initial amplitudes:
///
///   alpha delta e^{2ijt'} - beta gamma e^{-2ijt'}
///   - e^{-2ijt'} ((beta^2 + gamma^2) ij sin 2t' + (beta^2 - gamma^2) 2 j b- sin^2 t'
///                 - 8 beta gamma j^2 sin^2 t')
Complex delta_t_expanded(const TwoQubitState& s, const CouplingParams& p, double t);

/// F(r, phi, j, t') = e^{-i phi} (Delta(t') - Delta(0) e^{2ijt'}) / gamma^2.
/// Zeros of F mark times where |Delta| returns to its initial value.
/// Throws Error(kInvalidArgument) for j outside (0, 1/2] or r < 0.
Complex F_function(double r, double phi, double j, double t_prime);
Complex F_function(const PolarCoupling& c, double t_prime);

/// dF/dt' in closed form.
Complex F_derivative(double r, double phi, double j, double t_prime);

/// Roots of F on [t_lo, t_hi]: grid local minima of |F| refined by bisection
/// on the sign of d|F|^2/dt' (at most 60 halvings) and kept when |F| < tol.
/// Sorted and deduplicated.
std::vector<double> scan_roots(double r, double phi, double j, double t_lo, double t_hi,
                               int grid_points = 4096, double tol = 1e-10);

/// First-order root-preservation determinant at (j, t') = (n / 2m, m pi):
/// dFr/dj dFi/dt' - dFr/dt' dFi/dj = -4 pi n r (r^2 - 1) sin phi.
double root_preservation_residual(int n, double r, double phi);

/// Largest mismatch between the root set shifted by `period` and the root set
/// itself, over roots whose shift stays inside [.., t_hi]. Infinity when no
/// root has an in-window partner.
double period_deviation(const std::vector<double>& roots, double period, double t_hi);

}  // namespace ising2q

#endif  // ISING2Q_PERIODICITY_H_
