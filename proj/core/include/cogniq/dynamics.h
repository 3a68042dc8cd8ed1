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

#ifndef COGNIQ_DYNAMICS_H_
#define COGNIQ_DYNAMICS_H_

#include <array>
#include <cstdint>
#include <string_view>

#include "cogniq/game.h"
#include "cogniq/learner.h"

namespace cogniq {

// Parameters of the deterministic mean-field map.
class MeanField {
 public:
  // Throws std::invalid_argument if gamma is not finite and positive.
  MeanField(const RewardMatrix& rewards, double gamma);

  const RewardMatrix& rewards() const { return rewards_; }
  double gamma() const { return gamma_; }

  // Rewards and temperature both multiplied by `factor`.
  MeanField Scaled(double factor) const;

 private:
  RewardMatrix rewards_;
  double gamma_;
};

// Diagonal of the 4x4 opponent-mix matrix A(q): entry (i, j) is the
// probability that user i's opponent picks the channel other than j. All
// off-diagonal entries of A are zero.
Vec4 OpponentMixDiagonal(const QState& q, const MeanField& mf);

// Mean drift of the Q-update: A(q) r - q.
Vec4 G(const QState& q, const MeanField& mf);

double MaxAbs(const Vec4& v);

struct StationaryResult {
  QState q;
  std::int64_t iterations = 0;
  double residual = 0.0;  // ||G(q)||_inf at the returned point
  bool converged = false;
};

// Damped fixed-point iteration q <- (1 - lambda) q + lambda A(q) r until
// ||G(q)||_inf <= tol. lambda starts at `damping` and is halved whenever two
// successive drifts G point in opposite directions. A result with converged == false means max_iter was
// exhausted; retry from a different q0.
StationaryResult SolveStationary(const MeanField& mf, const QState& q0,
                                 double tol = 1e-10,
                                 std::int64_t max_iter = 100000,
                                 double damping = 0.5);

// Quadrants of the (mu_A, mu_B) = (Q_A1/Q_A2, Q_B1/Q_B2) plane.
//   I:   A prefers 1, B prefers 2  (orthogonal, stable)
//   II:  both prefer 1             (colliding)
//   III: A prefers 2, B prefers 1  (orthogonal, stable)
//   IV:  both prefer 2             (colliding)
enum class Region { kI, kII, kIII, kIV, kBoundary };

std::string_view ToString(Region region);

struct RegionLabel {
  Region region = Region::kBoundary;
  // Set when a ratio is undefined (0/0); region is then kBoundary.
  bool degenerate = false;
};

// mu = q1 / q2 on the extended reals: a zero denominator gives +inf or -inf
// by the sign of q1, and NaN when both are zero.
double PreferenceRatio(const UserQ& q);

// Boundary when either ratio is exactly 1 or undefined (NaN).
RegionLabel ClassifyRatios(double mu_a, double mu_b);
RegionLabel ClassifyRegion(const QState& q);

inline bool IsOrthogonal(Region region) {
  return region == Region::kI || region == Region::kIII;
}
inline bool IsColliding(Region region) {
  return region == Region::kII || region == Region::kIV;
}

// Coupling coefficients of the Lyapunov derivative, named by the pair of
// epsilon terms they multiply: c11 -> eps_A1 eps_B1, c12 -> eps_A1 eps_B2,
// c21 -> eps_A2 eps_B1, c22 -> eps_A2 eps_B2.
struct CCoefficients {
  double c11 = 0.0;
  double c12 = 0.0;
  double c21 = 0.0;
  double c22 = 0.0;
};

struct LyapunovReport {
  double v = 0.0;          // ||G(q)||^2
  double dv_dt = 0.0;      // d/dt V along q' = G(q), from the C expansion
  Vec4 epsilons{};         // G(q)
  CCoefficients c;
};

CCoefficients LyapunovCoefficients(const QState& q, const MeanField& mf);

// 1/2 dV/dt = -sum eps^2 + c12 eA1 eB2 - c11 eA1 eB1 + c21 eA2 eB1
//             - c22 eA2 eB2.
double HalfLyapunovDerivative(const Vec4& eps, const CCoefficients& c);

LyapunovReport Lyapunov(const QState& q, const MeanField& mf);

double MaxCoefficient(const CCoefficients& c);

// Upper bound on 1/2 dV/dt: -(1 - max C) sum eps^2. Each eps appears in two
// cross terms, so |cross terms| <= max C * sum eps^2. Every C is at most
// max R / (2 gamma), hence the bound is strictly negative for eps != 0 once
// all rewards are below 2 gamma.
double HalfLyapunovDerivativeBound(const Vec4& eps, const CCoefficients& c);

// Rewards (and a matching initial state) divided by a common factor so that
// every reward sits below `margin * 2 gamma`, with gamma unchanged. factor is
// 1 when the bound already holds.
struct RescaledProblem {
  MeanField mf;
  QState q0;
  double factor = 1.0;
};

RescaledProblem RescaleBelowTemperatureBound(const MeanField& mf,
                                             const QState& q0,
                                             double margin = 0.9);

bool SatisfiesTemperatureBound(const MeanField& mf);

}  // namespace cogniq

#endif  // COGNIQ_DYNAMICS_H_
