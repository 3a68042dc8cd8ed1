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

#include "cogniq/game.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cogniq {
namespace {

constexpr std::array<const char*, 4> kRewardNames = {"r_a1", "r_a2", "r_b1",
                                                     "r_b2"};

}  // namespace

std::string_view ToString(UserId user) {
  return user == UserId::kA ? "A" : "B";
}

std::string_view ToString(Channel channel) {
  return channel == Channel::kCh1 ? "1" : "2";
}

RewardMatrix::RewardMatrix(double r_a1, double r_a2, double r_b1, double r_b2)
    : RewardMatrix(std::array<double, 4>{r_a1, r_a2, r_b1, r_b2}) {}

RewardMatrix::RewardMatrix(const std::array<double, 4>& values)
    : values_(values) {
  for (int k = 0; k < 4; ++k) {
    if (!std::isfinite(values_[k]) || values_[k] <= 0.0) {
      throw std::invalid_argument(std::string("reward ") + kRewardNames[k] +
                                  " must be finite and strictly positive");
    }
  }
}

double RewardMatrix::max() const {
  return *std::max_element(values_.begin(), values_.end());
}

RewardMatrix RewardMatrix::Scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("reward scale factor must be positive");
  }
  std::array<double, 4> scaled = values_;
  for (double& v : scaled) v *= factor;
  return RewardMatrix(scaled);
}

RewardSample RealizeRewards(const JointAction& actions,
                            const RewardMatrix& rewards) {
  if (actions.collides()) return {0.0, 0.0};
  return {rewards.at(UserId::kA, actions.action_a),
          rewards.at(UserId::kB, actions.action_b)};
}

std::vector<JointAction> NashEquilibria(const RewardMatrix& rewards) {
  std::vector<JointAction> equilibria;
  for (Channel a : kChannels) {
    for (Channel b : kChannels) {
      const JointAction profile{a, b};
      const RewardSample payoff = RealizeRewards(profile, rewards);
      const RewardSample deviate_a =
          RealizeRewards({Other(a), b}, rewards);
      const RewardSample deviate_b =
          RealizeRewards({a, Other(b)}, rewards);
      if (deviate_a.reward_a <= payoff.reward_a &&
          deviate_b.reward_b <= payoff.reward_b) {
        equilibria.push_back(profile);
      }
    }
  }
  return equilibria;
}

}  // namespace cogniq
