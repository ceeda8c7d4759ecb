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

#include "cli/sweep.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cli/csv.h"
#include "cli/sweep_internal.h"
#include "ising2q/ising2q.h"

namespace ising2q::cli {

namespace {

using std::numbers::pi;

constexpr int kDefaultSteps = 200;
constexpr int kDefaultSpectrumSteps = 41;

const char* verdict_name(Verdict v) { return v == Verdict::kEntangled ? "entangled" : "inconclusive"; }

TwoQubitState initial_state(const SweepRequest& r) {
  const std::string& s = r.state;
  if (s == "00") return TwoQubitState::basis(0);
  if (s == "01") return TwoQubitState::basis(1);
  if (s == "10") return TwoQubitState::basis(2);
  if (s == "11") return TwoQubitState::basis(3);
  if (s == "bell01") return TwoQubitState::bell01();
  if (s == "bell10") return TwoQubitState::bell10();
  if (s == "theta") {
    if (!r.theta) throw UsageError("--state theta needs --theta");
    return theta_family_state(*r.theta);
  }
  if (s == "random") return sample_product_states(r.seed, 1).front();
  throw UsageError("unknown --state '" + s + "'");
}

double default_window(const CouplingParams& p) { return p.degenerate ? 2 * pi : 2 * pi / p.R; }

void write_spectrum(const SweepRequest& r, CsvWriter& csv) {
  csv.header({"b_minus", "b_plus", "E1", "E2", "E3", "E4"});
  auto row = [&](double bm, double bp) {
    const CouplingParams p = build_params_pm(r.J, bp, bm);
    const auto e = spectrum_energies(p);
    csv.cell(bm).cell(bp).cell(e[0]).cell(e[1]).cell(e[2]).cell(e[3]);
    csv.end_row();
  };
  if (r.B1 || r.B2 || r.B_plus || r.B_minus) {
    const CouplingParams p = request_params(r);
    row(p.B_minus, p.B_plus);
    return;
  }
  const int n = r.steps.value_or(kDefaultSpectrumSteps);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) row(grid_point(-r.b_max, r.b_max, n, a), grid_point(-r.b_max, r.b_max, n, b));
  }
}

void write_evolve(const SweepRequest& r, CsvWriter& csv) {
  const CouplingParams p = request_params(r);
  const TwoQubitState s0 = initial_state(r);
  const double t_max = r.t_max.value_or(default_window(p));
  const int n = r.steps.value_or(kDefaultSteps);
  csv.header({"t", "re00", "im00", "re01", "im01", "re10", "im10", "re11", "im11", "entropy"});
  for (int i = 0; i < n; ++i) {
    const double t = grid_point(0, t_max, n, i);
    const TwoQubitState s = evolve(s0, p, t);
    csv.cell(t);
    for (int k = 0; k < 4; ++k) csv.cell(s[k].real()).cell(s[k].imag());
    csv.cell(schmidt(s).entropy);
    csv.end_row();
  }
}

void write_entropy_sweep(const SweepRequest& r, CsvWriter& csv) {
  std::vector<CouplingParams> traces;
  if (r.b_minus_list.empty()) {
    traces.push_back(request_params(r));
  } else {
    if (r.B1 || r.B2 || r.B_minus) throw UsageError("--b-minus-list replaces --b1/--b2/--b-minus");
    for (double bm : r.b_minus_list) traces.push_back(build_params_pm(r.J, r.B_plus.value_or(0.0), bm));
  }
  const TwoQubitState s0 = initial_state(r);
  const int n = r.steps.value_or(kDefaultSteps);
  csv.header({"t", "b_minus", "entropy"});
  for (const CouplingParams& p : traces) {
    const double t_max = r.t_max.value_or(default_window(p));
    for (int i = 0; i < n; ++i) {
      const double t = grid_point(0, t_max, n, i);
      csv.cell(t).cell(p.B_minus).cell(schmidt(evolve(s0, p, t)).entropy);
      csv.end_row();
    }
  }
}

void write_witness(const SweepRequest& r, CsvWriter& csv) {
  const CouplingParams p = request_params(r);
  const TwoQubitState s0 = initial_state(r);
  const double t_max = r.t_max.value_or(default_window(p));
  const int n = r.steps.value_or(kDefaultSteps);
  csv.header({"t", "energy", "separable_lo", "separable_hi", "energy_verdict", "spin_dot",
              "spin_dot_verdict"});
  for (int i = 0; i < n; ++i) {
    const double t = grid_point(0, t_max, n, i);
    const TwoQubitState s = evolve(s0, p, t);
    const WitnessVerdict e = witness_verdict(s, p, Observable::kEnergy);
    const WitnessVerdict d = witness_verdict(s, p, Observable::kSpinDot);
    csv.cell(t).cell(e.value).cell(e.separable_lo).cell(e.separable_hi).cell(verdict_name(e.verdict));
    csv.cell(d.value).cell(verdict_name(d.verdict));
    csv.end_row();
  }
}

void write_loop(const SweepRequest& r, CsvWriter& csv) {
  std::vector<LoopSpec> loops;
  if (r.n_max > 0) {
    loops = enumerate_loops(r.J, r.n_max);
  } else {
    if (!r.n || !r.m || !r.s) throw UsageError("loop needs --n, --m and --s (or --n-max)");
    loops.push_back(design_loop(*r.n, *r.m, *r.s, r.J, r.sign));
  }
  csv.header({"n", "m", "s", "sign", "J", "B_plus", "B_minus", "T", "distance", "phase_re",
              "phase_im", "expected_re", "expected_im"});
  for (const LoopSpec& l : loops) {
    const ControlCheck c = verify_control(l.params(), l.T, ControlTarget::kIdentity);
    csv.cell(l.n).cell(l.m).cell(l.s).cell(l.sign).cell(l.J).cell(l.B_plus).cell(l.B_minus).cell(l.T);
    csv.cell(c.distance).cell(c.phase.real()).cell(c.phase.imag());
    csv.cell(l.expected_phase.real()).cell(l.expected_phase.imag());
    csv.end_row();
  }
}

void write_swap(const SweepRequest& r, CsvWriter& csv) {
  const SwapSpec w = design_swap(r.n.value_or(0), r.m.value_or(0), r.J);
  const ControlCheck c = verify_control(w.params(), w.T, ControlTarget::kExchange);
  csv.header({"n", "m", "J", "B_plus", "B_minus", "T", "distance", "phase_re", "phase_im",
              "expected_re", "expected_im"});
  csv.cell(w.n).cell(w.m).cell(w.J).cell(w.B_plus).cell(w.B_minus).cell(w.T);
  csv.cell(c.distance).cell(c.phase.real()).cell(c.phase.imag());
  csv.cell(w.expected_phase.real()).cell(w.expected_phase.imag());
  csv.end_row();
}

void write_periodicity(const SweepRequest& r, CsvWriter& csv) {
  const double j = r.jn ? *r.jn : request_params(r).j;
  const double t_max = r.t_max.value_or(8 * pi);
  if (r.roots) {
    const int grid = std::max(r.steps.value_or(4096), 100);
    csv.header({"t_prime", "abs_F"});
    for (double t : scan_roots(r.r, r.phi, j, 0.0, t_max, grid)) {
      csv.cell(t).cell(std::abs(F_function(r.r, r.phi, j, t)));
      csv.end_row();
    }
    return;
  }
  const int n = r.steps.value_or(kDefaultSteps);
  csv.header({"t_prime", "F_re", "F_im", "abs_F"});
  for (int i = 0; i < n; ++i) {
    const double t = grid_point(0, t_max, n, i);
    const Complex f = F_function(r.r, r.phi, j, t);
    csv.cell(t).cell(f.real()).cell(f.imag()).cell(std::abs(f));
    csv.end_row();
  }
}

}  // namespace

double grid_point(double lo, double hi, int n, int i) {
  if (i == n - 1) return hi;
  return lo + (hi - lo) * i / (n - 1);
}

std::array<double, 4> spectrum_energies(const CouplingParams& p) {
  if (!p.degenerate) return spectrum(p).energies;
  return {-p.J - p.B_plus, -p.J + p.B_plus, p.J, p.J};
}

void validate(const SweepRequest& r) {
  if (r.precision < 6 || r.precision > 17) throw UsageError("--precision must lie in [6, 17]");
  if (r.steps && *r.steps < 2) throw UsageError("--steps must be at least 2");
  if (r.t_max && !(*r.t_max > 0.0)) throw UsageError("--t-max must be positive");
  if (r.sign != 1 && r.sign != -1) throw UsageError("--sign must be +1 or -1");
  const bool physical = r.B1 || r.B2;
  const bool sum_diff = r.B_plus || r.B_minus;
  if (physical && sum_diff) throw UsageError("use either --b1/--b2 or --b-plus/--b-minus, not both");
  if (r.command == Command::kFigure && (r.figure < 1 || r.figure > 6)) {
    throw UsageError("--figure must be 1..6");
  }
  if (r.p && !(*r.p >= 0.0 && *r.p <= 1.0)) throw UsageError("--p must lie in [0, 1]");
  if (!(r.b_max > 0.0)) throw UsageError("--b-max must be positive");
  if (r.n_max < 0) throw UsageError("--n-max must be >= 0");
}

CouplingParams request_params(const SweepRequest& r) {
  if (r.B_plus || r.B_minus) return build_params_pm(r.J, r.B_plus.value_or(0.0), r.B_minus.value_or(0.0));
  return build_params(r.J, r.B1.value_or(0.0), r.B2.value_or(0.0));
}

std::string run(const SweepRequest& r) {
  validate(r);
  if (r.command == Command::kFigure) return figure_dataset(r.figure, r);
  std::ostringstream out;
  CsvWriter csv(out, r.precision);
  switch (r.command) {
    case Command::kSpectrum:
      write_spectrum(r, csv);
      break;
    case Command::kEvolve:
      write_evolve(r, csv);
      break;
    case Command::kEntropySweep:
      write_entropy_sweep(r, csv);
      break;
    case Command::kWitness:
      write_witness(r, csv);
      break;
    case Command::kLoop:
      write_loop(r, csv);
      break;
    case Command::kSwap:
      write_swap(r, csv);
      break;
    case Command::kPeriodicity:
      write_periodicity(r, csv);
      break;
    case Command::kFigure:
      break;
  }
  return out.str();
}

}  // namespace ising2q::cli
