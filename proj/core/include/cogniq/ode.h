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

#ifndef COGNIQ_ODE_H_
#define COGNIQ_ODE_H_

#include <cstdint>
#include <vector>

#include "cogniq/dynamics.h"
#include "cogniq/learner.h"

namespace cogniq {

struct OdeConfig {
  double step_h = 1e-2;
  double max_time = 1e3;
  double stop_tol = 1e-8;  // on ||G(q)||_inf
  std::int64_t record_every = 1;

  void Validate() const;
};

struct OdeTrace {
  enum class Stop { kConverged, kMaxTime };

  std::vector<double> times;
  std::vector<QState> states;
  std::vector<double> lyapunov;
  std::vector<Region> regions;
  Stop stop = Stop::kMaxTime;
  double final_residual = 0.0;
  std::int64_t steps = 0;

  std::size_t size() const { return states.size(); }
  const QState& final_state() const { return states.back(); }
};

// Fixed-step classic RK4 on q' = G(q). The initial state is always
// recorded, then every `record_every` steps, and the final state is
// recorded whatever the stride. Throws std::runtime_error if the state ever
// becomes non-finite.
OdeTrace Integrate(const QState& q0, const MeanField& mf, const OdeConfig& cfg);

// One RK4 step of size h.
QState Rk4Step(const QState& q, const MeanField& mf, double h);

// True iff V = ||G||^2, recomputed from the recorded states, never rises by
// more than `slack` between consecutive records. Requires every reward of
// `mf` to be below 2 gamma (throws std::invalid_argument otherwise); use
// RescaleBelowTemperatureBound first.
bool LyapunovMonotone(const OdeTrace& trace, const MeanField& mf,
                      double slack = 1e-10);

}  // namespace cogniq

#endif  // COGNIQ_ODE_H_
