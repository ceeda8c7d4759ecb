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

#ifndef ISING2Q_PARAMS_H_
#define ISING2Q_PARAMS_H_

namespace ising2q {

/// Physical inputs of the two-qubit Ising Hamiltonian
///   H = -J sigma_1 . sigma_2 + B1 sigma_1z + B2 sigma_2z   (hbar = 1)
/// together with the normalized quantities used by the closed forms.
///
/// All energies share one unit and times are in inverse energy. The
/// dimensionless time t' = R t is only used internally; every public function
/// takes physical time.
///
/// When R = 0 (J = 0 and B1 = B2) the normalized fields are undefined:
/// `degenerate` is set and b_plus, b_minus, j are left at zero.
struct CouplingParams {
  double J = 0.0;
  double B1 = 0.0;
  double B2 = 0.0;

  double B_plus = 0.0;
  double B_minus = 0.0;
  double R = 0.0;
  double b_plus = 0.0;
  double b_minus = 0.0;
  double j = 0.0;
  bool degenerate = true;

  /// t' = R t.
  double normalized_time(double t) const { return R * t; }

  /// (R + B_minus) / R and (R - B_minus) / R, i.e. 1 + b_minus and
  /// 1 - b_minus, without the cancellation that hits the smaller of the two
  /// when |B_minus| >> |J|.
  double one_plus_b_minus() const;
  double one_minus_b_minus() const;
};

/// Builds and validates parameters. Throws Error(kInvalidArgument) on
/// non-finite input. Negative J is accepted; j then carries the sign of J.
CouplingParams build_params(double J, double B1, double B2);

/// Same, from the sum/difference fields.
CouplingParams build_params_pm(double J, double B_plus, double B_minus);

/// Parameters with a prescribed normalized coupling j in (0, 1/2] and energy
/// scale R: J = j R, B_minus = sign * R sqrt(1 - 4 j^2), B_plus = b_plus R.
CouplingParams params_from_normalized(double j, double b_minus_sign = 1.0, double b_plus = 0.0,
                                      double R = 1.0);

/// Throws Error(kDegenerateParameters) when `p.degenerate`.
void require_nondegenerate(const CouplingParams& p, const char* where);

}  // namespace ising2q

#endif  // ISING2Q_PARAMS_H_
