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

#include "cogniq/ode.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cogniq {
namespace {

QState Axpy(const QState& q, double h, const Vec4& k) {
  QState out = q;
  for (int i = 0; i < 4; ++i) out[i] += h * k[i];
  return out;
}

double LyapunovValue(const QState& q, const MeanField& mf) {
  double v = 0.0;
  for (double e : G(q, mf)) v += e * e;
  return v;
}

}  // namespace

void OdeConfig::Validate() const {
  if (!(step_h > 0.0)) throw std::invalid_argument("ode step_h must be > 0");
  if (!(max_time > 0.0)) {
    throw std::invalid_argument("ode max_time must be > 0");
  }
  if (!(stop_tol >= 0.0)) {
    throw std::invalid_argument("ode stop_tol must be >= 0");
  }
  if (record_every < 1) {
    throw std::invalid_argument("ode record_every must be >= 1");
  }
}

QState Rk4Step(const QState& q, const MeanField& mf, double h) {
  const Vec4 k1 = G(q, mf);
  const Vec4 k2 = G(Axpy(q, 0.5 * h, k1), mf);
  const Vec4 k3 = G(Axpy(q, 0.5 * h, k2), mf);
  const Vec4 k4 = G(Axpy(q, h, k3), mf);
  QState out = q;
  for (int i = 0; i < 4; ++i) {
    out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

OdeTrace Integrate(const QState& q0, const MeanField& mf,
                   const OdeConfig& cfg) {
  cfg.Validate();
  if (!q0.IsFinite()) throw std::invalid_argument("q0 must be finite");

  OdeTrace trace;
  auto record = [&](double t, const QState& q) {
    trace.times.push_back(t);
    trace.states.push_back(q);
    trace.lyapunov.push_back(LyapunovValue(q, mf));
    trace.regions.push_back(ClassifyRegion(q).region);
  };

  QState q = q0;
  double residual = MaxAbs(G(q, mf));
  record(0.0, q);
  // Stepping by index keeps the time grid exact multiples of h.
  const auto max_steps =
      static_cast<std::int64_t>(std::ceil(cfg.max_time / cfg.step_h - 1e-9));
  std::int64_t step = 0;
  while (residual > cfg.stop_tol && step < max_steps) {
    q = Rk4Step(q, mf, cfg.step_h);
    ++step;
    if (!q.IsFinite()) {
      throw std::runtime_error("ODE state became non-finite at step " +
                               std::to_string(step));
    }
    residual = MaxAbs(G(q, mf));
    const bool last = residual <= cfg.stop_tol || step == max_steps;
    if (last || step % cfg.record_every == 0) {
      record(static_cast<double>(step) * cfg.step_h, q);
    }
  }
  trace.steps = step;
  trace.final_residual = residual;
  trace.stop = residual <= cfg.stop_tol ? OdeTrace::Stop::kConverged
                                        : OdeTrace::Stop::kMaxTime;
  return trace;
}

bool LyapunovMonotone(const OdeTrace& trace, const MeanField& mf,
                      double slack) {
  if (!SatisfiesTemperatureBound(mf)) {
    throw std::invalid_argument(
        "Lyapunov descent is only certified when every reward is below "
        "2 gamma");
  }
  if (trace.states.empty()) return true;
  double prev = LyapunovValue(trace.states.front(), mf);
  for (std::size_t k = 1; k < trace.states.size(); ++k) {
    const double v = LyapunovValue(trace.states[k], mf);
    if (v > prev + slack) return false;
    prev = v;
  }
  return true;
}

}  // namespace cogniq
