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

#ifndef ISING2Q_ISING2Q_H_
#define ISING2Q_ISING2Q_H_

#include "ising2q/control.h"
#include "ising2q/entanglement.h"
#include "ising2q/error.h"
#include "ising2q/hamiltonian.h"
#include "ising2q/isotropy.h"
#include "ising2q/linalg.h"
#include "ising2q/params.h"
#include "ising2q/periodicity.h"
#include "ising2q/propagator.h"
#include "ising2q/state.h"
#include "ising2q/unitary.h"
#include "ising2q/witness.h"

#endif  // ISING2Q_ISING2Q_H_
