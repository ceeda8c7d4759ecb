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

#include "ising2q/params.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ising2q/error.h"

namespace ising2q {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid argument";
    case ErrorCode::kDegenerateParameters:
      return "degenerate parameters";
    case ErrorCode::kNumericFailure:
      return "numeric failure";
    case ErrorCode::kNoEntanglementGeneration:
      return "no entanglement generation";
    case ErrorCode::kNotAttainable:
      return "not attainable";
    case ErrorCode::kInvalidLoopIndices:
      return "invalid loop indices";
  }
  return "unknown error";
}

double CouplingParams::one_plus_b_minus() const {
  if (B_minus >= 0.0) return (R + B_minus) / R;
  return 4.0 * J * J / ((R - B_minus) * R);
}

double CouplingParams::one_minus_b_minus() const {
  if (B_minus <= 0.0) return (R - B_minus) / R;
  return 4.0 * J * J / ((R + B_minus) * R);
}

namespace {

CouplingParams complete(CouplingParams p) {
  p.R = std::hypot(p.B_minus, 2.0 * p.J);
  p.degenerate = !(p.R > 0.0);
  if (!p.degenerate) {
    p.b_plus = p.B_plus / p.R;
    p.b_minus = p.B_minus / p.R;
    p.j = p.J / p.R;
  }
  return p;
}

}  // namespace

CouplingParams build_params(double J, double B1, double B2) {
  if (!std::isfinite(J) || !std::isfinite(B1) || !std::isfinite(B2)) {
    throw Error(ErrorCode::kInvalidArgument, "J, B1 and B2 must be finite");
  }
  CouplingParams p;
  p.J = J;
  p.B1 = B1;
  p.B2 = B2;
  p.B_plus = B1 + B2;
  p.B_minus = B1 - B2;
  return complete(p);
}

CouplingParams build_params_pm(double J, double B_plus, double B_minus) {
  if (!std::isfinite(J) || !std::isfinite(B_plus) || !std::isfinite(B_minus)) {
    throw Error(ErrorCode::kInvalidArgument, "J, B+ and B- must be finite");
  }
  CouplingParams p;
  p.J = J;
  p.B1 = 0.5 * (B_plus + B_minus);
  p.B2 = 0.5 * (B_plus - B_minus);
  p.B_plus = B_plus;
  p.B_minus = B_minus;
  return complete(p);
}

CouplingParams params_from_normalized(double j, double b_minus_sign, double b_plus, double R) {
  if (!(j > 0.0 && j <= 0.5) || !(R > 0.0) || !std::isfinite(b_plus)) {
    throw Error(ErrorCode::kInvalidArgument, "need j in (0, 1/2], R > 0 and finite b+");
  }
  const double bm = std::sqrt(std::max(0.0, 1.0 - 4.0 * j * j));
  return build_params_pm(j * R, b_plus * R, (b_minus_sign < 0 ? -bm : bm) * R);
}

void require_nondegenerate(const CouplingParams& p, const char* where) {
  if (p.degenerate) {
    throw Error(ErrorCode::kDegenerateParameters,
                std::string(where) + ": R = 0 (J = 0 and B1 = B2), normalized fields undefined");
  }
}

}  // namespace ising2q
