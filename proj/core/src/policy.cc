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

#include "cogniq/policy.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cogniq {
namespace {

void CheckFinite(const UserQ& q) {
  if (!std::isfinite(q.q1) || !std::isfinite(q.q2)) {
    throw std::invalid_argument("Q-values must be finite");
  }
}

}  // namespace

void PolicyParams::Validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument(
        "gamma: temperature must be finite and strictly positive");
  }
  if (!(explore_floor >= 0.0 && explore_floor < 0.5)) {
    throw std::invalid_argument("explore_floor must lie in [0, 0.5)");
  }
}

namespace softmax {

double FirstProbability(double x1, double x2, double gamma) {
  // Only the difference matters; 1 / (1 + e^{(x2-x1)/gamma}) with the
  // exponent kept non-positive.
  const double d = (x1 - x2) / gamma;
  if (d >= 0.0) return 1.0 / (1.0 + std::exp(-d));
  const double e = std::exp(d);
  return e / (1.0 + e);
}

double ProductTerm(double x1, double x2, double gamma) {
  const double e = std::exp(-std::abs(x1 - x2) / gamma);
  const double s = 1.0 + e;
  return e / (s * s);
}

}  // namespace softmax

double Channel1Probability(const UserQ& q, const PolicyParams& params) {
  params.Validate();
  CheckFinite(q);
  const double p = softmax::FirstProbability(q.q1, q.q2, params.gamma);
  return std::clamp(p, params.explore_floor, 1.0 - params.explore_floor);
}

double ChannelProbability(Channel channel, const UserQ& q,
                          const PolicyParams& params) {
  // The complement keeps the pair summing to exactly 1, matching what
  // SampleAction draws from.
  const double p1 = Channel1Probability(q, params);
  return channel == Channel::kCh1 ? p1 : 1.0 - p1;
}

Channel SampleAction(const UserQ& q, const PolicyParams& params, Rng& rng) {
  const double p1 = Channel1Probability(q, params);
  return rng.Uniform() < p1 ? Channel::kCh1 : Channel::kCh2;
}

double ExpectedReward(double reward, Channel channel, const UserQ& q_opponent,
                      const PolicyParams& params) {
  if (params.explore_floor != 0.0) {
    throw std::invalid_argument(
        "expected reward is defined for the unfloored policy only");
  }
  return reward * ChannelProbability(Other(channel), q_opponent, params);
}

double ExpectedReward(UserId user, Channel channel, const UserQ& q_opponent,
                      const RewardMatrix& rewards, const PolicyParams& params) {
  return ExpectedReward(rewards.at(user, channel), channel, q_opponent, params);
}

}  // namespace cogniq
