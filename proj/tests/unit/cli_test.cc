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

#include <sys/wait.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/csv.h"
#include "cli/sweep.h"
#include "gtest/gtest.h"
#include "ising2q/ising2q.h"

namespace ising2q::cli {
namespace {

using std::numbers::pi;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : static_cast<int>(it - header.begin());
  }
  double num(std::size_t row, const std::string& name) const {
    return std::stod(rows.at(row).at(column(name)));
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

Table parse(const std::string& csv) {
  Table t;
  std::stringstream ss(csv);
  std::string line;
  std::getline(ss, line);
  t.header = split(line);
  while (std::getline(ss, line)) t.rows.push_back(split(line));
  return t;
}

SweepRequest request(Command c) {
  SweepRequest r;
  r.command = c;
  return r;
}

TEST(FormatNumber, Basics) {
  EXPECT_EQ(format_number(0.1, 12), "0.1");
  EXPECT_EQ(format_number(-0.0, 12), "0");
  EXPECT_EQ(format_number(1.0 / 3.0, 6), "0.333333");
  EXPECT_EQ(format_number(2.0, 17), "2");
  EXPECT_EQ(format_number(-1.5e-300, 12), "-1.5e-300");
  EXPECT_EQ(format_number(NAN, 12), "nan");
  EXPECT_EQ(format_number(-INFINITY, 12), "-inf");
}

TEST(FormatNumber, RoundTripProperty) {
  std::mt19937_64 rng(91);
  std::uniform_real_distribution<double> mant(-10, 10);
  std::uniform_int_distribution<int> expo(-30, 30);
  for (int precision = 6; precision <= 17; ++precision) {
    for (int i = 0; i < 500; ++i) {
      const double v = mant(rng) * std::pow(10.0, expo(rng));
      const std::string s = format_number(v, precision);
      double back = 0;
      std::from_chars(s.data(), s.data() + s.size(), back);
      EXPECT_LE(std::abs(back - v), std::pow(10.0, 1 - precision) * std::abs(v)) << s;
      if (precision == 17) EXPECT_EQ(back, v);
    }
  }
}

TEST(CsvWriter, Layout) {
  std::ostringstream out;
  CsvWriter w(out, 6);
  w.header({"a", "b", "c"});
  w.cell(1.25).cell(3).cell("x");
  w.end_row();
  EXPECT_EQ(out.str(), "a,b,c\n1.25,3,x\n");
}

TEST(Validate, RejectsBadRequests) {
  auto bad = [](SweepRequest r) { EXPECT_THROW(run(r), UsageError); };
  SweepRequest r = request(Command::kEvolve);
  r.t_max = 0.0;
  bad(r);
  r = request(Command::kEvolve);
  r.steps = 1;
  bad(r);
  r = request(Command::kSpectrum);
  r.precision = 5;
  bad(r);
  r.precision = 18;
  bad(r);
  r = request(Command::kSpectrum);
  r.B1 = 1.0;
  r.B_minus = 2.0;
  bad(r);
  r = request(Command::kFigure);
  r.figure = 7;
  bad(r);
  r.figure = 0;
  bad(r);
  r = request(Command::kLoop);
  bad(r);
  r = request(Command::kEvolve);
  r.state = "theta";
  bad(r);
  r = request(Command::kFigure);
  r.figure = 4;
  r.B_plus = 1.0;
  bad(r);
}

TEST(Run, SpectrumAtGivenFields) {
  SweepRequest r = request(Command::kSpectrum);
  r.B1 = 2.0;
  r.B2 = 1.0;
  const Table t = parse(run(r));
  EXPECT_EQ(t.header, (std::vector<std::string>{"b_minus", "b_plus", "E1", "E2", "E3", "E4"}));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_NEAR(t.num(0, "E1"), -4, 1e-11);
  EXPECT_NEAR(t.num(0, "E2"), 2, 1e-11);
  EXPECT_NEAR(t.num(0, "E3"), 1 - std::sqrt(5.0), 1e-11);
  EXPECT_NEAR(t.num(0, "E4"), 1 + std::sqrt(5.0), 1e-11);
}

TEST(Run, SpectrumGridMatchesClosedForms) {
  SweepRequest r = request(Command::kSpectrum);
  r.steps = 9;
  const Table t = parse(run(r));
  ASSERT_EQ(t.rows.size(), 81u);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double bm = t.num(i, "b_minus"), bp = t.num(i, "b_plus");
    const double R = std::hypot(bm, 2.0);
    EXPECT_NEAR(t.num(i, "E1"), -1 - bp, 1e-10);
    EXPECT_NEAR(t.num(i, "E2"), -1 + bp, 1e-10);
    EXPECT_NEAR(t.num(i, "E3"), 1 - R, 1e-10);
    EXPECT_NEAR(t.num(i, "E4"), 1 + R, 1e-10);
  }
}

TEST(Run, EvolveRoundTrip) {
  SweepRequest r = request(Command::kEvolve);
  r.J = 0.7;
  r.B1 = 1.3;
  r.B2 = -0.4;
  r.state = "random";
  r.seed = 3;
  r.steps = 50;
  r.t_max = 4.0;
  for (int precision : {6, 12, 17}) {
    r.precision = precision;
    const Table t = parse(run(r));
    ASSERT_EQ(t.rows.size(), 50u);
    const CouplingParams p = build_params(0.7, 1.3, -0.4);
    const TwoQubitState s0 = sample_product_states(3, 1).front();
    const double rel = std::pow(10.0, 1 - precision);
    const char* names[4][2] = {{"re00", "im00"}, {"re01", "im01"}, {"re10", "im10"}, {"re11", "im11"}};
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      // The printed time is itself rounded; use the exact grid value.
      const double time = i + 1 == t.rows.size() ? 4.0 : 4.0 * static_cast<double>(i) / 49.0;
      EXPECT_NEAR(t.num(i, "t"), time, rel * time);
      const TwoQubitState s = evolve(s0, p, time);
      for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(t.num(i, names[k][0]), s[k].real(), rel * std::abs(s[k].real()) + 1e-300);
        EXPECT_NEAR(t.num(i, names[k][1]), s[k].imag(), rel * std::abs(s[k].imag()) + 1e-300);
      }
      EXPECT_NEAR(t.num(i, "entropy"), schmidt(s).entropy, rel * schmidt(s).entropy + 1e-300);
    }
  }
}

TEST(Run, EntropySweepList) {
  SweepRequest r = request(Command::kEntropySweep);
  r.b_minus_list = {0, 4};
  r.steps = 11;
  const Table t = parse(run(r));
  EXPECT_EQ(t.header, (std::vector<std::string>{"t", "b_minus", "entropy"}));
  ASSERT_EQ(t.rows.size(), 22u);
  EXPECT_EQ(t.num(0, "b_minus"), 0.0);
  EXPECT_EQ(t.num(11, "b_minus"), 4.0);
  EXPECT_NEAR(t.num(10, "t"), pi, 1e-11);
}

TEST(Run, WitnessColumns) {
  SweepRequest r = request(Command::kWitness);
  r.state = "bell10";
  r.steps = 3;
  const Table t = parse(run(r));
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_NEAR(t.num(0, "energy"), 3.0, 1e-11);
  EXPECT_EQ(t.rows[0][t.column("energy_verdict")], "entangled");
  EXPECT_NEAR(t.num(0, "spin_dot"), -3.0, 1e-11);
}

TEST(Run, LoopAndSwapRows) {
  SweepRequest r = request(Command::kLoop);
  r.n = 2;
  r.m = 1;
  r.s = 2;
  Table t = parse(run(r));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_NEAR(t.num(0, "B_minus"), 2 * std::sqrt(3.0), 1e-11);
  EXPECT_LT(t.num(0, "distance"), 1e-9);

  r = request(Command::kLoop);
  r.n_max = 3;
  t = parse(run(r));
  EXPECT_EQ(t.rows.size(), enumerate_loops(1.0, 3).size());

  r = request(Command::kSwap);
  r.m = 1;
  t = parse(run(r));
  EXPECT_NEAR(t.num(0, "B_plus"), 8.0, 1e-11);
  EXPECT_NEAR(t.num(0, "phase_re"), t.num(0, "expected_re"), 1e-9);
  EXPECT_NEAR(t.num(0, "phase_im"), t.num(0, "expected_im"), 1e-9);
}

TEST(Run, PeriodicityRoots) {
  SweepRequest r = request(Command::kPeriodicity);
  r.jn = 0.25;
  r.roots = true;
  r.t_max = 4 * pi;
  const Table t = parse(run(r));
  ASSERT_GE(t.rows.size(), 3u);
  EXPECT_NEAR(t.num(0, "t_prime"), 0.0, 1e-7);
  EXPECT_NEAR(t.num(t.rows.size() - 1, "t_prime"), 4 * pi, 1e-7);
}

TEST(Figure, TwoReachesUnitEntropyBelowLimit) {
  SweepRequest r = request(Command::kFigure);
  r.figure = 2;
  const Table t = parse(run(r));
  EXPECT_EQ(t.rows.size(), 4u * 1025u);
  std::map<double, double> best;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    double& b = best[t.num(i, "b_minus")];
    b = std::max(b, t.num(i, "entropy"));
  }
  EXPECT_NEAR(best[0], 1.0, 1e-9);
  EXPECT_NEAR(best[1], 1.0, 1e-4);
  EXPECT_NEAR(best[2], 1.0, 1e-4);
  EXPECT_NEAR(best[4], binary_entropy(0.2), 1e-4);
  EXPECT_LE(best[4], binary_entropy(0.2) + 1e-11);
}

TEST(Figure, OneHasUnitScaledColumns) {
  SweepRequest r = request(Command::kFigure);
  r.figure = 1;
  r.J = 2.0;
  const Table t = parse(run(r));
  EXPECT_EQ(t.rows.size(), 41u * 41u);
  // E4 / J at b_minus = b_plus = 0 is 1 + 2 = 3.
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.num(i, "b_minus") == 0 && t.num(i, "b_plus") == 0) EXPECT_NEAR(t.num(i, "E4"), 3, 1e-11);
  }
}

TEST(Figure, ThreeRationalCouplingRepeats) {
  SweepRequest r = request(Command::kFigure);
  r.figure = 3;
  r.jn = 0.25;
  r.theta = pi / 8;
  r.steps = 1025;
  const Table t = parse(run(r));
  ASSERT_EQ(t.rows.size(), 1025u);
  // Step is pi / 128, so index + 128 is t' + pi.
  for (std::size_t i = 0; i + 128 < t.rows.size(); ++i)
    EXPECT_NEAR(t.num(i, "entropy"), t.num(i + 128, "entropy"), 1e-9);
}

TEST(Figure, FourLoopRestoresEntropy) {
  SweepRequest r = request(Command::kFigure);
  r.figure = 4;
  r.steps = 11;
  const Table t = parse(run(r));
  ASSERT_EQ(t.rows.size(), 2u * 21u * 11u);
  for (std::size_t i = 0; i < t.rows.size(); i += 11)
    EXPECT_NEAR(t.num(i, "entropy"), t.num(i + 10, "entropy"), 1e-9);
}

TEST(Figure, FourExplicitFields) {
  SweepRequest r = request(Command::kFigure);
  r.figure = 4;
  r.B_plus = 1.0;
  r.B_minus = 0.5;
  r.t_max = 2.0;
  r.p = 0.3;
  r.steps = 5;
  const Table t = parse(run(r));
  ASSERT_EQ(t.rows.size(), 10u);
  EXPECT_NEAR(t.num(4, "t"), 2.0, 1e-12);
}

TEST(Figure, FiveStateFamilies) {
  SweepRequest r = request(Command::kFigure);
  r.figure = 5;
  r.steps = 21;
  const Table t = parse(run(r));
  ASSERT_EQ(t.rows.size(), 6u * 21u * 21u);
  for (std::size_t i = 0; i < t.rows.size(); i += 21) {
    const std::string state = t.rows[i][0];
    const double p = t.num(i, "p");
    if (state == "e") {
      for (int k = 1; k < 21; ++k) EXPECT_NEAR(t.num(i + k, "entropy"), t.num(i, "entropy"), 1e-9);
    }
    if (state <= "d") {
      EXPECT_LT(t.num(i, "entropy"), 1e-9);
      EXPECT_LT(t.num(i + 20, "entropy"), 1e-9);
    }
    if (state == "a" && p == 0.5) EXPECT_GT(t.num(i + 10, "entropy"), 0.1);
  }
}

TEST(Figure, SixShape) {
  SweepRequest r = request(Command::kFigure);
  r.figure = 6;
  r.steps = 9;
  const Table t = parse(run(r));
  EXPECT_EQ(t.rows.size(), 2u * 3u * 5u * 9u);
  EXPECT_EQ(t.header, (std::vector<std::string>{"j", "phi", "r", "t_prime", "abs_F"}));
}

TEST(Figure, Deterministic) {
  for (int id = 1; id <= 6; ++id) {
    SweepRequest r = request(Command::kFigure);
    r.figure = id;
    EXPECT_EQ(run(r), run(r)) << id;
  }
}

#ifdef ISING2Q_CLI_PATH
int exit_status(const std::string& args) {
  const std::string cmd = std::string(ISING2Q_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

TEST(Executable, ExitCodes) {
  EXPECT_EQ(exit_status("spectrum --b1 2 --b2 1"), 0);
  EXPECT_EQ(exit_status("--help"), 0);
  EXPECT_EQ(exit_status("evolve --t-max 0"), 2);
  EXPECT_EQ(exit_status("spectrum --b1 1 --b-plus 2"), 2);
  EXPECT_EQ(exit_status("loop --n 3 --m 0 --s 2"), 2);
  EXPECT_EQ(exit_status("figure --figure 9"), 2);
  EXPECT_EQ(exit_status("bogus"), 2);
  EXPECT_EQ(exit_status("evolve --steps 1"), 2);
  EXPECT_EQ(exit_status("spectrum --out /nonexistent-dir/x.csv"), 1);
}
#endif

}  // namespace
}  // namespace ising2q::cli
