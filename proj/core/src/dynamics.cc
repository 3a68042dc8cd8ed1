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

#include "cogniq/dynamics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cogniq/policy.h"

namespace cogniq {
namespace {

void CheckFinite(const QState& q) {
  if (!q.IsFinite()) throw std::invalid_argument("Q-state must be finite");
}

}  // namespace

MeanField::MeanField(const RewardMatrix& rewards, double gamma)
    : rewards_(rewards), gamma_(gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument(
        "gamma: temperature must be finite and strictly positive");
  }
}

MeanField MeanField::Scaled(double factor) const {
  return MeanField(rewards_.Scaled(factor), gamma_ * factor);
}

Vec4 OpponentMixDiagonal(const QState& q, const MeanField& mf) {
  CheckFinite(q);
  Vec4 diag{};
  for (UserId user : kUsers) {
    const UserQ opp = q.user(Other(user));
    // Opponent's probability of picking the other channel. Both sides are
    // evaluated directly; 1 - p loses the small tail to cancellation.
    diag[Index(user, Channel::kCh1)] =
        softmax::FirstProbability(opp.q2, opp.q1, mf.gamma());
    diag[Index(user, Channel::kCh2)] =
        softmax::FirstProbability(opp.q1, opp.q2, mf.gamma());
  }
  return diag;
}

Vec4 G(const QState& q, const MeanField& mf) {
  const Vec4 diag = OpponentMixDiagonal(q, mf);
  const Vec4& r = mf.rewards().values();
  Vec4 g{};
  for (int k = 0; k < 4; ++k) g[k] = diag[k] * r[k] - q[k];
  return g;
}

double MaxAbs(const Vec4& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

StationaryResult SolveStationary(const MeanField& mf, const QState& q0,
                                 double tol, std::int64_t max_iter,
                                 double damping) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (max_iter < 0) throw std::invalid_argument("max_iter must be >= 0");
  if (!(damping > 0.0 && damping <= 1.0)) {
    throw std::invalid_argument("damping must lie in (0, 1]");
  }
  StationaryResult result;
  result.q = q0;
  Vec4 g = G(result.q, mf);
  result.residual = MaxAbs(g);
  double lambda = damping;
  while (result.residual > tol && result.iterations < max_iter) {
    for (int k = 0; k < 4; ++k) result.q[k] += lambda * g[k];
    ++result.iterations;
    const Vec4 next = G(result.q, mf);
    // Successive drifts pointing in opposite directions mean the step
    // overshot (the II <-> IV two-cycle); halve the damping.
    double dot = 0.0;
    for (int k = 0; k < 4; ++k) dot += next[k] * g[k];
    if (dot < 0.0) lambda *= 0.5;
    g = next;
    result.residual = MaxAbs(g);
  }
  result.converged = result.residual <= tol;
  return result;
}

std::string_view ToString(Region region) {
  switch (region) {
    case Region::kI:
      return "I";
    case Region::kII:
      return "II";
    case Region::kIII:
      return "III";
    case Region::kIV:
      return "IV";
    case Region::kBoundary:
      return "Boundary";
  }
  return "Boundary";
}

double PreferenceRatio(const UserQ& q) {
  if (q.q2 == 0.0) {
    if (q.q1 == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return q.q1 > 0.0 ? std::numeric_limits<double>::infinity()
                      : -std::numeric_limits<double>::infinity();
  }
  return q.q1 / q.q2;
}

RegionLabel ClassifyRatios(double mu_a, double mu_b) {
  if (std::isnan(mu_a) || std::isnan(mu_b)) return {Region::kBoundary, true};
  if (mu_a == 1.0 || mu_b == 1.0) return {Region::kBoundary, false};
  const bool a_prefers_1 = mu_a > 1.0;
  const bool b_prefers_1 = mu_b > 1.0;
  if (a_prefers_1 && b_prefers_1) return {Region::kII, false};
  if (!a_prefers_1 && !b_prefers_1) return {Region::kIV, false};
  if (a_prefers_1) return {Region::kI, false};
  return {Region::kIII, false};
}

RegionLabel ClassifyRegion(const QState& q) {
  return ClassifyRatios(PreferenceRatio(q.user(UserId::kA)),
                        PreferenceRatio(q.user(UserId::kB)));
}

CCoefficients LyapunovCoefficients(const QState& q, const MeanField& mf) {
  CheckFinite(q);
  const double gamma = mf.gamma();
  const RewardMatrix& r = mf.rewards();
  // s_B couples A's rates to B's Q-values and vice versa.
  const double s_b = softmax::ProductTerm(q.at(UserId::kB, Channel::kCh1),
                                          q.at(UserId::kB, Channel::kCh2),
                                          gamma) / gamma;
  const double s_a = softmax::ProductTerm(q.at(UserId::kA, Channel::kCh1),
                                          q.at(UserId::kA, Channel::kCh2),
                                          gamma) / gamma;
  const double k_a1 = r.at(UserId::kA, Channel::kCh1) * s_b;
  const double k_a2 = r.at(UserId::kA, Channel::kCh2) * s_b;
  const double k_b1 = r.at(UserId::kB, Channel::kCh1) * s_a;
  const double k_b2 = r.at(UserId::kB, Channel::kCh2) * s_a;
  return {.c11 = k_a1 + k_b1,
          .c12 = k_a1 + k_b2,
          .c21 = k_a2 + k_b1,
          .c22 = k_a2 + k_b2};
}

double HalfLyapunovDerivative(const Vec4& eps, const CCoefficients& c) {
  const double ea1 = eps[0], ea2 = eps[1], eb1 = eps[2], eb2 = eps[3];
  const double sum_sq = ea1 * ea1 + ea2 * ea2 + eb1 * eb1 + eb2 * eb2;
  return -sum_sq + c.c12 * ea1 * eb2 - c.c11 * ea1 * eb1 +
         c.c21 * ea2 * eb1 - c.c22 * ea2 * eb2;
}

LyapunovReport Lyapunov(const QState& q, const MeanField& mf) {
  LyapunovReport report;
  report.epsilons = G(q, mf);
  for (double e : report.epsilons) report.v += e * e;
  report.c = LyapunovCoefficients(q, mf);
  report.dv_dt = 2.0 * HalfLyapunovDerivative(report.epsilons, report.c);
  return report;
}

double MaxCoefficient(const CCoefficients& c) {
  return std::max({c.c11, c.c12, c.c21, c.c22});
}

double HalfLyapunovDerivativeBound(const Vec4& eps, const CCoefficients& c) {
  double sum_sq = 0.0;
  for (double e : eps) sum_sq += e * e;
  return -(1.0 - MaxCoefficient(c)) * sum_sq;
}

bool SatisfiesTemperatureBound(const MeanField& mf) {
  return mf.rewards().max() < 2.0 * mf.gamma();
}

RescaledProblem RescaleBelowTemperatureBound(const MeanField& mf,
                                             const QState& q0, double margin) {
  if (!(margin > 0.0 && margin < 1.0)) {
    throw std::invalid_argument("margin must lie in (0, 1)");
  }
  if (SatisfiesTemperatureBound(mf)) return {mf, q0, 1.0};
  const double factor = margin * 2.0 * mf.gamma() / mf.rewards().max();
  return {MeanField(mf.rewards().Scaled(factor), mf.gamma()),
          q0.Scaled(factor), factor};
}

}  // namespace cogniq
