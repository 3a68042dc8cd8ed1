// Copyright 2026 The cogniq Authors
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

#ifndef COGNIQ_VERIFY_H_
#define COGNIQ_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "cogniq/dynamics.h"
#include "cogniq/ode.h"

namespace cogniq {

struct VerifyOptions {
  std::int64_t samples = 100;
  std::uint64_t seed = 0;
  double stationary_tol = 1e-10;
  std::int64_t stationary_max_iter = 100000;
  OdeConfig ode;
  // Self-test of the checker: negate C12 when assembling the analytic
  // derivative. Every derivative check should then fail.
  bool inject_c12_sign_fault = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Numerical certificate of the mean-field convergence argument for `mf`:
//   lyapunov_negativity   dV/dt < 0 and below -(1 - max C) sum eps^2 after
//                         rescaling rewards under 2 gamma
//   lyapunov_derivative   analytic dV/dt vs central difference of V along G
//   lyapunov_monotone     V non-increasing along rescaled ODE traces
//   stationary_residual   solver residual and the fixed-point equations
//   scale_equivariance    G(cq; c gamma, c r) = c G and C invariant
std::vector<CheckResult> RunVerification(const MeanField& mf,
                                         const VerifyOptions& options);

}  // namespace cogniq

#endif  // COGNIQ_VERIFY_H_
