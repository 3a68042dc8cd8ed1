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

#include "cogniq/verify.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cogniq/random.h"

namespace cogniq {
namespace {

QState RandomInBox(const RewardMatrix& rewards, Rng& rng) {
  QState q;
  for (int k = 0; k < 4; ++k) q[k] = rng.Uniform() * rewards.values()[k];
  return q;
}

double V(const QState& q, const MeanField& mf) {
  double v = 0.0;
  for (double e : G(q, mf)) v += e * e;
  return v;
}

double AnalyticDvDt(const QState& q, const MeanField& mf, bool fault) {
  const Vec4 eps = G(q, mf);
  CCoefficients c = LyapunovCoefficients(q, mf);
  if (fault) c.c12 = -c.c12;
  return 2.0 * HalfLyapunovDerivative(eps, c);
}

template <typename T>
std::string Str(const T& v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

CheckResult CheckNegativity(const MeanField& mf, const VerifyOptions& opt,
                            Rng& rng) {
  const RescaledProblem scaled = RescaleBelowTemperatureBound(mf, QState{});
  std::int64_t failures = 0;
  for (std::int64_t n = 0; n < opt.samples; ++n) {
    const QState q = RandomInBox(scaled.mf.rewards(), rng);
    const Vec4 eps = G(q, scaled.mf);
    CCoefficients c = LyapunovCoefficients(q, scaled.mf);
    if (opt.inject_c12_sign_fault) c.c12 = -c.c12;
    const double half = HalfLyapunovDerivative(eps, c);
    // The certificate uses the true coefficients.
    const double bound =
        HalfLyapunovDerivativeBound(eps, LyapunovCoefficients(q, scaled.mf));
    const bool eps_zero = MaxAbs(eps) == 0.0;
    if (!(eps_zero || (half < 0.0 && half <= bound * (1.0 - 1e-12)))) {
      ++failures;
    }
  }
  return {"lyapunov_negativity", failures == 0,
          "reward scale factor " + Str(scaled.factor) + ", " +
              std::to_string(failures) + "/" + std::to_string(opt.samples) +
              " violations"};
}

CheckResult CheckDerivative(const MeanField& mf, const VerifyOptions& opt,
                            Rng& rng) {
  constexpr double kH = 1e-6;
  constexpr double kRelTol = 1e-5;
  double worst = 0.0;
  for (std::int64_t n = 0; n < opt.samples; ++n) {
    const QState q = RandomInBox(mf.rewards(), rng);
    const Vec4 g = G(q, mf);
    QState plus = q, minus = q;
    for (int k = 0; k < 4; ++k) {
      plus[k] += kH * g[k];
      minus[k] -= kH * g[k];
    }
    const double numeric = (V(plus, mf) - V(minus, mf)) / (2.0 * kH);
    const double analytic = AnalyticDvDt(q, mf, opt.inject_c12_sign_fault);
    const double scale = std::max(std::abs(numeric), std::abs(analytic));
    const double rel = scale == 0.0 ? 0.0 : std::abs(numeric - analytic) / scale;
    worst = std::max(worst, rel);
  }
  return {"lyapunov_derivative", worst <= kRelTol,
          "max relative error " + Str(worst)};
}

CheckResult CheckMonotone(const MeanField& mf, const VerifyOptions& opt,
                          Rng& rng) {
  const std::int64_t traces = std::max<std::int64_t>(1, opt.samples / 10);
  std::int64_t failures = 0;
  for (std::int64_t n = 0; n < traces; ++n) {
    const RescaledProblem scaled =
        RescaleBelowTemperatureBound(mf, RandomInBox(mf.rewards(), rng));
    const OdeTrace trace = Integrate(scaled.q0, scaled.mf, opt.ode);
    if (!LyapunovMonotone(trace, scaled.mf) ||
        trace.stop != OdeTrace::Stop::kConverged) {
      ++failures;
    }
  }
  return {"lyapunov_monotone", failures == 0,
          std::to_string(failures) + "/" + std::to_string(traces) +
              " traces failed"};
}

CheckResult CheckStationary(const MeanField& mf, const VerifyOptions& opt,
                            Rng& rng) {
  const std::int64_t starts = std::max<std::int64_t>(1, opt.samples / 10);
  std::int64_t failures = 0;
  double worst = 0.0;
  for (std::int64_t n = 0; n < starts; ++n) {
    const StationaryResult res =
        SolveStationary(mf, RandomInBox(mf.rewards(), rng), opt.stationary_tol,
                        opt.stationary_max_iter);
    const Vec4 mix = OpponentMixDiagonal(res.q, mf);
    double eq_residual = 0.0;
    for (int k = 0; k < 4; ++k) {
      eq_residual = std::max(
          eq_residual, std::abs(res.q[k] - mf.rewards().values()[k] * mix[k]));
    }
    worst = std::max(worst, eq_residual);
    if (!res.converged || eq_residual > opt.stationary_tol) ++failures;
  }
  return {"stationary_residual", failures == 0,
          "max residual " + Str(worst) + ", " + std::to_string(failures) +
              " failures"};
}

CheckResult CheckScaling(const MeanField& mf, const VerifyOptions& opt,
                         Rng& rng) {
  constexpr double kTol = 1e-12;
  double worst = 0.0;
  for (std::int64_t n = 0; n < opt.samples; ++n) {
    const QState q = RandomInBox(mf.rewards(), rng);
    const Vec4 g = G(q, mf);
    const CCoefficients c = LyapunovCoefficients(q, mf);
    for (double factor : {1e-3, 1.0, 1e3}) {
      const MeanField smf = mf.Scaled(factor);
      const Vec4 gs = G(q.Scaled(factor), smf);
      const CCoefficients cs = LyapunovCoefficients(q.Scaled(factor), smf);
      for (int k = 0; k < 4; ++k) {
        worst = std::max(worst, std::abs(gs[k] / factor - g[k]) /
                                    std::max(1.0, std::abs(g[k])));
      }
      for (auto [a, b] : {std::pair{c.c11, cs.c11}, {c.c12, cs.c12},
                          {c.c21, cs.c21}, {c.c22, cs.c22}}) {
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
      }
    }
  }
  return {"scale_equivariance", worst <= kTol, "max deviation " + Str(worst)};
}

}  // namespace

std::vector<CheckResult> RunVerification(const MeanField& mf,
                                         const VerifyOptions& options) {
  std::vector<CheckResult> results;
  Rng rng(SubstreamSeed(options.seed, 0x5645524946ULL, 0));
  results.push_back(CheckNegativity(mf, options, rng));
  results.push_back(CheckDerivative(mf, options, rng));
  results.push_back(CheckMonotone(mf, options, rng));
  results.push_back(CheckStationary(mf, options, rng));
  results.push_back(CheckScaling(mf, options, rng));
  return results;
}

}  // namespace cogniq
