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

#ifndef ISING2Q_PROPAGATOR_H_
#define ISING2Q_PROPAGATOR_H_

#include "ising2q/params.h"
#include "ising2q/state.h"
#include "ising2q/unitary.h"

namespace ising2q {

/// U(t) = exp(-i H t) from its closed form in normalized time t' = R t:
///
///   |00><00|:  exp(-i t'(b+ - j))
///   |11><11|:  exp( i t'(b+ + j))
///   central block on (|01>, |10>):
///     exp(-i j t') [[cos t' - i b- sin t',  2 i j sin t'],
///                   [2 i j sin t',          cos t' + i b- sin t']]
///
/// Throws Error(kDegenerateParameters) when R = 0.
Unitary4 propagator_closed_form(const CouplingParams& p, double t);

/// Independent route: dense Hermitian eigendecomposition of `hamiltonian(p)`
/// and U = sum_i exp(-i E_i t) |v_i><v_i|. Does not use any closed form.
/// Throws Error(kNumericFailure) if the eigensolver fails.
Unitary4 propagator_oracle(const CouplingParams& p, double t);

/// Closed form when R > 0; for R = 0 the Hamiltonian is diagonal and the
/// propagator is the corresponding diagonal phase matrix.
Unitary4 propagator(const CouplingParams& p, double t);

/// U(t)|s>. Throws Error(kInvalidArgument) if `s` is not normalized.
TwoQubitState evolve(const TwoQubitState& s, const CouplingParams& p, double t);

}  // namespace ising2q

#endif  // ISING2Q_PROPAGATOR_H_
