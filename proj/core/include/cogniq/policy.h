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

#ifndef COGNIQ_POLICY_H_
#define COGNIQ_POLICY_H_

#include "cogniq/game.h"
#include "cogniq/random.h"

namespace cogniq {

// Temperature and optional exploration floor of a Boltzmann policy.
struct PolicyParams {
  double gamma = 0.1;
  // Each channel keeps probability at least `explore_floor`; in [0, 0.5).
  double explore_floor = 0.0;

  // Throws std::invalid_argument if gamma <= 0 or the floor is out of range.
  void Validate() const;
};

// One user's Q-values for channels 1 and 2.
struct UserQ {
  double q1 = 0.0;
  double q2 = 0.0;

  double of(Channel channel) const {
    return channel == Channel::kCh1 ? q1 : q2;
  }
  friend bool operator==(const UserQ&, const UserQ&) = default;
};

namespace softmax {

// e^{x1/gamma} / (e^{x1/gamma} + e^{x2/gamma}), evaluated after shifting
// by the larger exponent so that it stays finite for any finite inputs.
double FirstProbability(double x1, double x2, double gamma);

// e^{x1/gamma} e^{x2/gamma} / (e^{x1/gamma} + e^{x2/gamma})^2, i.e. p(1-p)
// for the two-way softmax; always in [0, 1/4].
double ProductTerm(double x1, double x2, double gamma);

}  // namespace softmax

// Probability that a user with Q-values `q` picks channel 1, clamped into
// [explore_floor, 1 - explore_floor].
double Channel1Probability(const UserQ& q, const PolicyParams& params);

double ChannelProbability(Channel channel, const UserQ& q,
                          const PolicyParams& params);

// Consumes exactly one uniform draw: Ch1 iff u < Channel1Probability.
Channel SampleAction(const UserQ& q, const PolicyParams& params, Rng& rng);

// Expected reward of a user who transmits on `channel` with payoff `reward`
// against an opponent playing the unfloored Boltzmann policy on
// `q_opponent`: reward * P(opponent picks the other channel).
double ExpectedReward(double reward, Channel channel, const UserQ& q_opponent,
                      const PolicyParams& params);

double ExpectedReward(UserId user, Channel channel, const UserQ& q_opponent,
                      const RewardMatrix& rewards, const PolicyParams& params);

}  // namespace cogniq

#endif  // COGNIQ_POLICY_H_
