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

#include "cogniq/learner.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cogniq {

bool QState::IsFinite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return std::isfinite(v); });
}

QState QState::Scaled(double factor) const {
  Vec4 scaled = values_;
  for (double& v : scaled) v *= factor;
  return QState(scaled);
}

StepSchedule StepSchedule::Vanishing(double alpha0) {
  StepSchedule s;
  s.kind = Kind::kVanishing;
  s.alpha0 = alpha0;
  return s;
}

StepSchedule StepSchedule::Floored(double alpha0, double floor) {
  StepSchedule s;
  s.kind = Kind::kFloored;
  s.alpha0 = alpha0;
  s.floor = floor;
  return s;
}

void StepSchedule::Validate() const {
  if (!(alpha0 > 0.0 && alpha0 <= 1.0)) {
    throw std::invalid_argument("alpha0 must lie in (0, 1]");
  }
  if (!(floor >= 0.0 && floor < 1.0)) {
    throw std::invalid_argument("alpha_floor must lie in [0, 1)");
  }
}

double StepSize(const StepSchedule& schedule, std::int64_t t) {
  schedule.Validate();
  if (t < 1) throw std::invalid_argument("step index t must be >= 1");
  const double alpha = schedule.alpha0 / static_cast<double>(t);
  if (schedule.kind == StepSchedule::Kind::kFloored) {
    return std::max(alpha, schedule.floor);
  }
  return alpha;
}

QState QUpdate(const QState& q, const JointAction& actions,
               const RewardSample& rewards, double alpha) {
  return QUpdate(q, actions, rewards, alpha, alpha);
}

QState QUpdate(const QState& q, const JointAction& actions,
               const RewardSample& rewards, double alpha_a, double alpha_b) {
  if (!(alpha_a >= 0.0 && alpha_a <= 1.0) ||
      !(alpha_b >= 0.0 && alpha_b <= 1.0)) {
    throw std::invalid_argument("step size alpha must lie in [0, 1]");
  }
  QState next = q;
  double& qa = next.at(UserId::kA, actions.action_a);
  qa = (1.0 - alpha_a) * qa + alpha_a * rewards.reward_a;
  double& qb = next.at(UserId::kB, actions.action_b);
  qb = (1.0 - alpha_b) * qb + alpha_b * rewards.reward_b;
  return next;
}

RoundOutcome PlayRound(const QState& q, const LearnerPair& learners,
                       const RewardMatrix& rewards, std::int64_t t, Rng& rng,
                       SelectionCounts* counts) {
  if (t < 1) throw std::invalid_argument("round index t must be >= 1");
  RoundOutcome out;
  out.actions.action_a = SampleAction(q.user(UserId::kA), learners.a.policy, rng);
  out.actions.action_b = SampleAction(q.user(UserId::kB), learners.b.policy, rng);
  out.rewards = RealizeRewards(out.actions, rewards);

  std::array<double, 2> alpha{};
  for (UserId user : kUsers) {
    const StepSchedule& schedule = learners.of(user).schedule;
    std::int64_t index = t;
    if (schedule.index == StepSchedule::Index::kSelectionCount) {
      if (counts == nullptr) {
        throw std::invalid_argument(
            "selection-count step index requires selection counters");
      }
      index = ++(*counts)[Index(user, out.actions.of(user))];
    } else if (counts != nullptr) {
      ++(*counts)[Index(user, out.actions.of(user))];
    }
    alpha[Index(user)] = StepSize(schedule, index);
  }
  out.q = QUpdate(q, out.actions, out.rewards, alpha[0], alpha[1]);
  return out;
}

ConditionalRewardEstimate EstimateConditionalRewards(
    const QState& q, const RewardMatrix& rewards, const PolicyParams& params,
    std::int64_t draws, Rng& rng) {
  if (draws < 1) throw std::invalid_argument("draws must be >= 1");
  ConditionalRewardEstimate est;
  Vec4 sum{};
  for (std::int64_t n = 0; n < draws; ++n) {
    JointAction actions;
    actions.action_a = SampleAction(q.user(UserId::kA), params, rng);
    actions.action_b = SampleAction(q.user(UserId::kB), params, rng);
    const RewardSample r = RealizeRewards(actions, rewards);
    for (UserId user : kUsers) {
      const int k = Index(user, actions.of(user));
      sum[k] += r.of(user);
      ++est.count[k];
    }
  }
  for (int k = 0; k < 4; ++k) {
    est.mean[k] = est.count[k] > 0 ? sum[k] / static_cast<double>(est.count[k])
                                   : 0.0;
  }
  return est;
}

}  // namespace cogniq
