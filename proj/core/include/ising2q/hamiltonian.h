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

#ifndef ISING2Q_HAMILTONIAN_H_
#define ISING2Q_HAMILTONIAN_H_

#include <array>

#include "ising2q/linalg.h"
#include "ising2q/params.h"
#include "ising2q/state.h"

namespace ising2q {

/// Matrix of H in the |00>,|01>,|10>,|11> basis:
///
///   [ B+ - J    0        0        0      ]
///   [ 0         B- + J   -2J      0      ]
///   [ 0         -2J      -B- + J  0      ]
///   [ 0         0        0        -B+ - J]
Matrix4c hamiltonian(const CouplingParams& p);

/// sigma_1 . sigma_2 = diag(1,-1,-1,1) plus 2 on the |01>,|10> coherences.
Matrix4c spin_dot_operator();

/// Closed-form eigenpairs:
///   E1 = -J - B+   u1 = |11>
///   E2 = -J + B+   u2 = |00>
///   E3 =  J - R    u3 ~ (2J, B- + R) on (|01>, |10>)
///   E4 =  J + R    u4 ~ (2J, B- - R) on (|01>, |10>)
struct SpectralData {
  std::array<double, 4> energies{};
  std::array<TwoQubitState, 4> vectors{};
};

/// Throws Error(kDegenerateParameters) when R = 0.
SpectralData spectrum(const CouplingParams& p);

}  // namespace ising2q

#endif  // ISING2Q_HAMILTONIAN_H_
