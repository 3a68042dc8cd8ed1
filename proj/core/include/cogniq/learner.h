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

#ifndef COGNIQ_LEARNER_H_
#define COGNIQ_LEARNER_H_

#include <array>
#include <cstdint>

#include "cogniq/game.h"
#include "cogniq/policy.h"
#include "cogniq/random.h"

namespace cogniq {

using Vec4 = std::array<double, 4>;

// The joint Q-vector (Q_A1, Q_A2, Q_B1, Q_B2). Serves both as the learners'
// live estimate and as the state of the mean-field ODE.
class QState {
 public:
  QState() = default;
  QState(double q_a1, double q_a2, double q_b1, double q_b2)
      : values_{q_a1, q_a2, q_b1, q_b2} {}
  explicit QState(const Vec4& values) : values_(values) {}

  double at(UserId user, Channel channel) const {
    return values_[Index(user, channel)];
  }
  double& at(UserId user, Channel channel) {
    return values_[Index(user, channel)];
  }
  double operator[](int k) const { return values_[k]; }
  double& operator[](int k) { return values_[k]; }

  UserQ user(UserId id) const {
    return {at(id, Channel::kCh1), at(id, Channel::kCh2)};
  }
  const Vec4& values() const { return values_; }

  bool IsFinite() const;
  QState Scaled(double factor) const;

  friend bool operator==(const QState&, const QState&) = default;

 private:
  Vec4 values_{};
};

// alpha(t) = alpha0 / t, optionally clamped from below.
struct StepSchedule {
  enum class Kind { kVanishing, kFloored };
  // Which counter plays the role of t for entry (i, j): the global round
  // number, or the number of times user i has selected channel j so far.
  enum class Index { kGlobalRound, kSelectionCount };

  Kind kind = Kind::kVanishing;
  double alpha0 = 1.0;
  double floor = 0.0;
  Index index = Index::kGlobalRound;

  static StepSchedule Vanishing(double alpha0);
  static StepSchedule Floored(double alpha0, double floor);

  void Validate() const;
};

double StepSize(const StepSchedule& schedule, std::int64_t t);

// Per-user learner configuration.
struct LearnerConfig {
  StepSchedule schedule;
  PolicyParams policy;
};

struct LearnerPair {
  LearnerConfig a;
  LearnerConfig b;

  const LearnerConfig& of(UserId user) const {
    return user == UserId::kA ? a : b;
  }
  static LearnerPair Symmetric(const LearnerConfig& config) {
    return {config, config};
  }
};

// Each user moves the Q-value of its chosen channel to
// (1 - alpha) Q + alpha r; unchosen entries are left untouched.
QState QUpdate(const QState& q, const JointAction& actions,
               const RewardSample& rewards, double alpha);
QState QUpdate(const QState& q, const JointAction& actions,
               const RewardSample& rewards, double alpha_a, double alpha_b);

// How many times each (user, channel) entry has been selected. Only needed
// for StepSchedule::Index::kSelectionCount.
using SelectionCounts = std::array<std::int64_t, 4>;

struct RoundOutcome {
  QState q;
  JointAction actions;
  RewardSample rewards;
};

// One spectrum access: A samples, then B samples, rewards are realized, and
// both users update. `counts` is required (and advanced) when either user
// indexes its schedule by selection count.
RoundOutcome PlayRound(const QState& q, const LearnerPair& learners,
                       const RewardMatrix& rewards, std::int64_t t, Rng& rng,
                       SelectionCounts* counts = nullptr);

// Monte-Carlo estimate of the reward each Q-entry would be moved toward,
// at a frozen state: samples `draws` joint actions and averages r_i over
// the draws in which user i picked channel j.
struct ConditionalRewardEstimate {
  Vec4 mean{};
  std::array<std::int64_t, 4> count{};
};

ConditionalRewardEstimate EstimateConditionalRewards(
    const QState& q, const RewardMatrix& rewards, const PolicyParams& params,
    std::int64_t draws, Rng& rng);

}  // namespace cogniq

#endif  // COGNIQ_LEARNER_H_
