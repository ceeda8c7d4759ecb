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

#include "ising2q/periodicity.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ising2q/error.h"

namespace ising2q {

namespace {

void require_polar(double r, double phi, double j, double t_prime) {
  if (!(j > 0.0 && j <= 0.5)) throw Error(ErrorCode::kInvalidArgument, "F: j must lie in (0, 1/2]");
  if (!(r >= 0.0) || !std::isfinite(r) || !std::isfinite(phi) || !std::isfinite(t_prime)) {
    throw Error(ErrorCode::kInvalidArgument, "F: need finite r >= 0, phi and t'");
  }
}

double d_abs2(double r, double phi, double j, double tp) {
  return 2.0 * std::real(std::conj(F_function(r, phi, j, tp)) * F_derivative(r, phi, j, tp));
}

}  // namespace

double PolarCoupling::b_minus() const { return std::sqrt(std::max(0.0, 1.0 - 4.0 * j * j)); }

TwoQubitState amplitude_evolution(const TwoQubitState& s, const CouplingParams& p, double t) {
  require_nondegenerate(p, "amplitude_evolution");
  s.require_normalized("amplitude_evolution");
  const double tp = p.normalized_time(t);
  const double j = p.j;
  const double b = p.b_minus;
  const double sn = std::sin(tp);
  const double cs = std::cos(tp);
  const Complex ph = std::exp(-kI * (j * tp));
  const Complex mix = Complex(0.0, 2.0 * j * sn);

  const Complex alpha = s.alpha() * std::exp(-kI * ((p.b_plus - j) * tp));
  const Complex beta = ph * (s.beta() * Complex(cs, -b * sn) + mix * s.gamma());
  const Complex gamma = ph * (mix * s.beta() + s.gamma() * Complex(cs, b * sn));
  const Complex delta = s.delta() * std::exp(kI * ((p.b_plus + j) * tp));
  return TwoQubitState(alpha, beta, gamma, delta);
}

Complex delta_t(const TwoQubitState& s, const CouplingParams& p, double t) {
  const TwoQubitState e = amplitude_evolution(s, p, t);
  return e.alpha() * e.delta() - e.beta() * e.gamma();
}

Complex delta_t_expanded(const TwoQubitState& s, const CouplingParams& p, double t) {
  require_nondegenerate(p, "delta_t_expanded");
  const double tp = p.normalized_time(t);
  const double j = p.j;
  const double sn = std::sin(tp);
  const Complex up = std::exp(kI * (2.0 * j * tp));
  const Complex down = std::conj(up);
  const Complex a = s.alpha(), b = s.beta(), g = s.gamma(), d = s.delta();
  const Complex bracket = (b * b + g * g) * Complex(0.0, j * std::sin(2.0 * tp)) +
                          (b * b - g * g) * (2.0 * j * p.b_minus * sn * sn) -
                          8.0 * b * g * j * j * sn * sn;
  return a * d * up - b * g * down - down * bracket;
}

Complex F_function(double r, double phi, double j, double t_prime) {
  require_polar(r, phi, j, t_prime);
  const double b = std::sqrt(std::max(0.0, 1.0 - 4.0 * j * j));
  const double s = std::sin(t_prime);
  const double c = std::cos(t_prime);
  const Complex e = std::exp(-kI * (2.0 * j * t_prime));
  const Complex ij(0.0, j);
  const Complex t1 = -2.0 * r * r * ij * std::exp(kI * phi) * e * s * Complex(c, -b * s);
  const Complex t2 = 2.0 * r * (Complex(0.0, std::sin(2.0 * j * t_prime)) + 4.0 * e * j * j * s * s);
  const Complex t3 = -2.0 * ij * std::exp(-kI * phi) * e * s * Complex(c, b * s);
  return t1 + t2 + t3;
}

Complex F_function(const PolarCoupling& c, double t_prime) {
  return F_function(c.r, c.phi, c.j, t_prime);
}

Complex F_derivative(double r, double phi, double j, double t_prime) {
  require_polar(r, phi, j, t_prime);
  const double b = std::sqrt(std::max(0.0, 1.0 - 4.0 * j * j));
  const double s = std::sin(t_prime);
  const double c = std::cos(t_prime);
  const double s2t = std::sin(2.0 * t_prime);
  const double c2t = std::cos(2.0 * t_prime);
  const Complex e = std::exp(-kI * (2.0 * j * t_prime));
  const Complex ij(0.0, j);
  // g1 = sin t'(cos t' - i b sin t'), g3 = sin t'(cos t' + i b sin t').
  const Complex g1(s * c, -b * s * s);
  const Complex g3(s * c, b * s * s);
  const Complex dg1(c2t, -b * s2t);
  const Complex dg3(c2t, b * s2t);
  const Complex d1 = -2.0 * r * r * ij * std::exp(kI * phi) * e * (-2.0 * ij * g1 + dg1);
  const Complex d2 = 2.0 * r *
                     (2.0 * ij * std::cos(2.0 * j * t_prime) +
                      4.0 * j * j * e * (-2.0 * ij * s * s + s2t));
  const Complex d3 = -2.0 * ij * std::exp(-kI * phi) * e * (-2.0 * ij * g3 + dg3);
  return d1 + d2 + d3;
}

std::vector<double> scan_roots(double r, double phi, double j, double t_lo, double t_hi,
                               int grid_points, double tol) {
  if (!(t_lo < t_hi) || !std::isfinite(t_lo) || !std::isfinite(t_hi)) {
    throw Error(ErrorCode::kInvalidArgument, "scan_roots: need finite t_lo < t_hi");
  }
  if (grid_points < 100) throw Error(ErrorCode::kInvalidArgument, "scan_roots: grid_points must be >= 100");
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "scan_roots: tol must be positive");
  require_polar(r, phi, j, t_lo);

  const int n = grid_points;
  const double h = (t_hi - t_lo) / (n - 1);
  auto grid_t = [&](int i) { return i == n - 1 ? t_hi : t_lo + i * h; };
  std::vector<double> mag(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) mag[i] = std::abs(F_function(r, phi, j, grid_t(i)));

  std::vector<std::pair<double, double>> found;  // (t', |F|)
  for (int i = 0; i < n; ++i) {
    if (i > 0 && mag[i] > mag[i - 1]) continue;
    if (i < n - 1 && mag[i] > mag[i + 1]) continue;

    const double left = grid_t(std::max(i - 1, 0));
    const double right = grid_t(std::min(i + 1, n - 1));
    const double d_left = d_abs2(r, phi, j, left);
    const double d_right = d_abs2(r, phi, j, right);
    double cand = grid_t(i);
    if (d_left < 0.0 && d_right > 0.0) {
      double lo = left, hi = right;
      for (int it = 0; it < 60 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (d_abs2(r, phi, j, mid) < 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      cand = 0.5 * (lo + hi);
    } else if (i == 0 && d_left >= 0.0) {
      cand = t_lo;
    } else if (i == n - 1 && d_right <= 0.0) {
      cand = t_hi;
    }
    double value = std::abs(F_function(r, phi, j, cand));
    if (value > mag[i]) {
      cand = grid_t(i);
      value = mag[i];
    }
    if (value < tol) found.emplace_back(cand, value);
  }

  std::sort(found.begin(), found.end());
  std::vector<double> roots;
  double last_value = 0.0;
  for (const auto& [t, v] : found) {
    if (!roots.empty() && t - roots.back() < 0.5 * h) {
      if (v < last_value) {
        roots.back() = t;
        last_value = v;
      }
      continue;
    }
    roots.push_back(t);
    last_value = v;
  }
  return roots;
}

double root_preservation_residual(int n, double r, double phi) {
  return -4.0 * M_PI * n * r * (r * r - 1.0) * std::sin(phi);
}

double period_deviation(const std::vector<double>& roots, double period, double t_hi) {
  const double slack = 1e-9 * std::max(1.0, std::abs(t_hi));
  double worst = -1.0;
  for (double t : roots) {
    const double target = t + period;
    if (target > t_hi + slack) continue;
    double nearest = std::numeric_limits<double>::infinity();
    for (double u : roots) nearest = std::min(nearest, std::abs(u - target));
    worst = std::max(worst, nearest);
  }
  return worst < 0.0 ? std::numeric_limits<double>::infinity() : worst;
}

}  // namespace ising2q
