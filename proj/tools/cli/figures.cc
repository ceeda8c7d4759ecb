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

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "cli/csv.h"
#include "cli/sweep.h"
#include "cli/sweep_internal.h"
#include "ising2q/ising2q.h"

namespace ising2q::cli {

namespace {

using std::numbers::pi;

std::vector<double> p_grid(const SweepRequest& o) {
  if (o.p) return {*o.p};
  std::vector<double> out;
  for (int i = 0; i <= 20; ++i) out.push_back(i / 20.0);
  return out;
}

Vector2c qubit(double a, double b) { return Vector2c(a, b); }

void figure1(const SweepRequest& o, CsvWriter& csv) {
  if (o.J == 0.0) throw UsageError("figure 1 is in units of J; --j must be nonzero");
  const int n = o.steps.value_or(41);
  csv.header({"b_minus", "b_plus", "E1", "E2", "E3", "E4"});
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double bm = grid_point(-o.b_max, o.b_max, n, a);
      const double bp = grid_point(-o.b_max, o.b_max, n, b);
      const auto e = spectrum_energies(build_params_pm(o.J, bp * o.J, bm * o.J));
      csv.cell(bm).cell(bp);
      for (double v : e) csv.cell(v / o.J);
      csv.end_row();
    }
  }
}

void figure2(const SweepRequest& o, CsvWriter& csv) {
  const std::vector<double> list = o.b_minus_list.empty() ? std::vector<double>{0, 1, 2, 4} : o.b_minus_list;
  const int per_period = o.steps.value_or(512);
  csv.header({"t", "b_minus", "entropy"});
  for (double bm : list) {
    const CouplingParams p = build_params_pm(o.J, 0.0, bm);
    const double period = 2 * pi / p.R;
    const int n = 2 * per_period + 1;
    for (int i = 0; i < n; ++i) {
      const double t = grid_point(0, 2 * period, n, i);
      csv.cell(t).cell(bm).cell(schmidt(evolve(TwoQubitState::basis(1), p, t)).entropy);
      csv.end_row();
    }
  }
}

void figure3(const SweepRequest& o, CsvWriter& csv) {
  std::vector<double> js = {1.0 / 16, 1.0 / 8, 1.0 / 4, 3.0 / 8, 1 / std::sqrt(7.0)};
  if (o.jn) js = {*o.jn};
  std::vector<double> thetas;
  if (o.theta) {
    thetas = {*o.theta};
  } else {
    for (int k = 0; k <= 8; ++k) thetas.push_back(k * pi / 16);
  }
  const double t_max = o.t_max.value_or(8 * pi);
  const int n = o.steps.value_or(1024);
  csv.header({"j", "theta", "t_prime", "entropy", "entropy_formula"});
  for (double j : js) {
    const CouplingParams p = params_from_normalized(j);
    for (double th : thetas) {
      for (int i = 0; i < n; ++i) {
        const double tp = grid_point(0, t_max, n, i);
        csv.cell(j).cell(th).cell(tp);
        csv.cell(theta_family_schmidt(th, p, tp / p.R).entropy);
        csv.cell(theta_family_schmidt_formula(th, j, tp).entropy);
        csv.end_row();
      }
    }
  }
}

void figure4(const SweepRequest& o, CsvWriter& csv) {
  CouplingParams p;
  double T = 0;
  if (o.B_plus || o.B_minus) {
    if (!o.t_max) throw UsageError("figure 4 with explicit --b-plus/--b-minus needs --t-max as the period");
    p = build_params_pm(o.J, o.B_plus.value_or(0.0), o.B_minus.value_or(0.0));
    T = *o.t_max;
  } else {
    const LoopSpec l = design_loop(o.n.value_or(1), o.m.value_or(1), o.s.value_or(1), o.J, o.sign);
    p = l.params();
    T = l.T;
  }
  const int n = o.steps.value_or(101);
  csv.header({"state", "p", "t", "entropy"});
  for (int sgn : {1, -1}) {
    for (double pp : p_grid(o)) {
      const TwoQubitState s0(0.0, std::sqrt(pp), sgn * std::sqrt(1 - pp), 0.0);
      for (int i = 0; i < n; ++i) {
        const double t = grid_point(0, T, n, i);
        csv.cell(sgn > 0 ? "plus" : "minus").cell(pp).cell(t).cell(schmidt(evolve(s0, p, t)).entropy);
        csv.end_row();
      }
    }
  }
}

TwoQubitState figure5_state(char which, double pp) {
  const double a = std::sqrt(pp), b = std::sqrt(1 - pp);
  switch (which) {
    case 'a':
      return TwoQubitState::product(qubit(a, b), qubit(1, 0));
    case 'b':
      return TwoQubitState::product(qubit(a, b), qubit(a, -b));
    case 'c':
      return TwoQubitState::product(qubit(b, a), qubit(a, -b));
    case 'd':
      return TwoQubitState::product(qubit(b, a), qubit(a, b));
    case 'e':
      return TwoQubitState(a, 0.0, 0.0, b);
    default:
      return TwoQubitState(0.0, a, b, 0.0);
  }
}

void figure5(const SweepRequest& o, CsvWriter& csv) {
  const SwapSpec w = design_swap(o.n.value_or(0), o.m.value_or(0), o.J);
  const CouplingParams p = w.params();
  const int n = o.steps.value_or(101);
  csv.header({"state", "p", "t", "entropy"});
  for (char which : {'a', 'b', 'c', 'd', 'e', 'f'}) {
    const char label[2] = {which, '\0'};
    for (double pp : p_grid(o)) {
      const TwoQubitState s0 = figure5_state(which, pp);
      for (int i = 0; i < n; ++i) {
        const double t = grid_point(0, w.T, n, i);
        csv.cell(label).cell(pp).cell(t).cell(schmidt(evolve(s0, p, t)).entropy);
        csv.end_row();
      }
    }
  }
}

void figure6(const SweepRequest& o, CsvWriter& csv) {
  std::vector<double> js = {0.25, 1 / std::sqrt(7.0)};
  if (o.jn) js = {*o.jn};
  const double t_max = o.t_max.value_or(16 * pi);
  const int n = o.steps.value_or(1601);
  csv.header({"j", "phi", "r", "t_prime", "abs_F"});
  for (double j : js) {
    for (double phi : {0.0, pi / 2, pi}) {
      for (double r : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (int i = 0; i < n; ++i) {
          const double tp = grid_point(0, t_max, n, i);
          csv.cell(j).cell(phi).cell(r).cell(tp).cell(std::abs(F_function(r, phi, j, tp)));
          csv.end_row();
        }
      }
    }
  }
}

}  // namespace

std::string figure_dataset(int id, const SweepRequest& overrides) {
  std::ostringstream out;
  CsvWriter csv(out, overrides.precision);
  switch (id) {
    case 1:
      figure1(overrides, csv);
      break;
    case 2:
      figure2(overrides, csv);
      break;
    case 3:
      figure3(overrides, csv);
      break;
    case 4:
      figure4(overrides, csv);
      break;
    case 5:
      figure5(overrides, csv);
      break;
    case 6:
      figure6(overrides, csv);
      break;
    default:
      throw UsageError("--figure must be 1..6");
  }
  return out.str();
}

}  // namespace ising2q::cli
