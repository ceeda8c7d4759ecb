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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/sweep.h"
#include "ising2q/error.h"

namespace {

constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;

struct Subcommand {
  const char* name;
  ising2q::cli::Command command;
  const char* help;
};

constexpr Subcommand kSubcommands[] = {
    {"spectrum", ising2q::cli::Command::kSpectrum,
     "E1..E4 on a (b_minus, b_plus) grid, or at the given fields"},
    {"evolve", ising2q::cli::Command::kEvolve, "amplitudes and entropy of U(t)|state>"},
    {"entropy-sweep", ising2q::cli::Command::kEntropySweep,
     "entropy of U(t)|state>, one trace per --b-minus-list entry"},
    {"witness", ising2q::cli::Command::kWitness, "energy and spin-dot witnesses along U(t)|state>"},
    {"loop", ising2q::cli::Command::kLoop, "design and verify an evolution loop (or --n-max to list them)"},
    {"swap", ising2q::cli::Command::kSwap, "design and verify a qubit exchange"},
    {"periodicity", ising2q::cli::Command::kPeriodicity, "F(r, phi, j, t') trace, or its roots with --roots"},
    {"figure", ising2q::cli::Command::kFigure, "dataset behind figure --figure 1..6"},
};

}  // namespace

int main(int argc, char** argv) {
  using ising2q::cli::SweepRequest;

  CLI::App app{"Two-qubit Ising dynamics in an inhomogeneous field. Writes CSV."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "ising2q 0.1.0");

  SweepRequest req;
  double b1 = 0, b2 = 0, b_plus = 0, b_minus = 0, t_max = 0, theta = 0, p = 0, jn = 0;
  int steps = 0, n = 0, m = 0, s = 0;
  std::string out_path;

  app.add_option("--j", req.J, "coupling J")->capture_default_str();
  auto* o_b1 = app.add_option("--b1", b1, "field on qubit 1");
  auto* o_b2 = app.add_option("--b2", b2, "field on qubit 2");
  auto* o_bp = app.add_option("--b-plus", b_plus, "B1 + B2");
  auto* o_bm = app.add_option("--b-minus", b_minus, "B1 - B2");
  for (auto* a : {o_b1, o_b2}) {
    for (auto* b : {o_bp, o_bm}) a->excludes(b);
  }
  app.add_option("--b-minus-list", req.b_minus_list, "comma separated B1 - B2 values")->delimiter(',');
  app.add_option("--b-max", req.b_max, "spectrum grid half-width")->capture_default_str();
  auto* o_tmax = app.add_option("--t-max", t_max, "end of the time window");
  auto* o_steps = app.add_option("--steps", steps, "grid points");
  auto* o_theta = app.add_option("--theta", theta, "theta-family angle");
  auto* o_p = app.add_option("--p", p, "single p in [0, 1] for figures 4 and 5");
  auto* o_n = app.add_option("--n", n, "loop or swap index n");
  auto* o_m = app.add_option("--m", m, "loop or swap index m");
  auto* o_s = app.add_option("--s", s, "loop index s");
  app.add_option("--sign", req.sign, "sign of B- for loops")->capture_default_str();
  app.add_option("--n-max", req.n_max, "list all primitive loops up to this n");
  app.add_option("--figure", req.figure, "figure id 1..6");
  app.add_option("--seed", req.seed, "seed for --state random")->capture_default_str();
  app.add_option("--precision", req.precision, "significant digits, 6..17")->capture_default_str();
  app.add_option("--state", req.state, "initial state")
      ->check(CLI::IsMember({"00", "01", "10", "11", "bell01", "bell10", "theta", "random"}))
      ->capture_default_str();
  app.add_option("--r", req.r, "|beta / gamma|")->capture_default_str();
  app.add_option("--phi", req.phi, "arg(beta / gamma)")->capture_default_str();
  auto* o_jn = app.add_option("--jn", jn, "normalized coupling J / R in (0, 1/2]");
  app.add_flag("--roots", req.roots, "periodicity: print roots instead of the trace");
  app.add_option("--out", out_path, "output file (default: standard output)");

  std::vector<CLI::App*> subs;
  for (const Subcommand& sc : kSubcommands) subs.push_back(app.add_subcommand(sc.name, sc.help));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) req.command = kSubcommands[i].command;
  }
  if (o_b1->count()) req.B1 = b1;
  if (o_b2->count()) req.B2 = b2;
  if (o_bp->count()) req.B_plus = b_plus;
  if (o_bm->count()) req.B_minus = b_minus;
  if (o_tmax->count()) req.t_max = t_max;
  if (o_steps->count()) req.steps = steps;
  if (o_theta->count()) req.theta = theta;
  if (o_p->count()) req.p = p;
  if (o_n->count()) req.n = n;
  if (o_m->count()) req.m = m;
  if (o_s->count()) req.s = s;
  if (o_jn->count()) req.jn = jn;

  std::string csv;
  try {
    csv = ising2q::cli::run(req);
  } catch (const ising2q::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ising2q::Error& e) {
    std::cerr << e.what() << "\n";
    const bool usage = e.code() == ising2q::ErrorCode::kInvalidArgument ||
                       e.code() == ising2q::ErrorCode::kInvalidLoopIndices;
    return usage ? kExitUsage : kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }

  if (out_path.empty()) {
    std::cout << csv;
    std::cout.flush();
    return std::cout ? 0 : kExitNumeric;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << csv;
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitNumeric;
  }
  return 0;
}
