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
#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

namespace cogniq {
namespace {

// Independent enumeration: payoff[a][b] = {reward of A, reward of B} with
// channel indices 0/1, collision on the diagonal.
std::vector<std::pair<int, int>> BruteForceEquilibria(
    const std::array<double, 4>& r) {
  double pay_a[2][2], pay_b[2][2];
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      pay_a[a][b] = a == b ? 0.0 : r[a];
      pay_b[a][b] = a == b ? 0.0 : r[2 + b];
    }
  }
  std::vector<std::pair<int, int>> eq;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const bool a_best = pay_a[a][b] >= pay_a[1 - a][b];
      const bool b_best = pay_b[a][b] >= pay_b[a][1 - b];
      if (a_best && b_best) eq.emplace_back(a, b);
    }
  }
  return eq;
}

std::vector<std::pair<int, int>> AsPairs(const std::vector<JointAction>& v) {
  std::vector<std::pair<int, int>> out;
  for (const JointAction& j : v) {
    out.emplace_back(Index(j.action_a), Index(j.action_b));
  }
  return out;
}

TEST(GameTest, OtherIsAnInvolution) {
  EXPECT_EQ(Other(UserId::kA), UserId::kB);
  EXPECT_EQ(Other(UserId::kB), UserId::kA);
  EXPECT_EQ(Other(Channel::kCh1), Channel::kCh2);
  EXPECT_EQ(Other(Other(Channel::kCh2)), Channel::kCh2);
}

TEST(GameTest, CollisionPaysNothing) {
  const RewardMatrix r(5, 3, 2, 7);
  EXPECT_EQ(RealizeRewards({Channel::kCh1, Channel::kCh1}, r),
            (RewardSample{0, 0}));
  EXPECT_EQ(RealizeRewards({Channel::kCh2, Channel::kCh2}, r),
            (RewardSample{0, 0}));
}

TEST(GameTest, OrthogonalTransmissionPaysOwnReward) {
  const RewardMatrix r(5, 3, 2, 7);
  EXPECT_EQ(RealizeRewards({Channel::kCh1, Channel::kCh2}, r),
            (RewardSample{5, 7}));
  EXPECT_EQ(RealizeRewards({Channel::kCh2, Channel::kCh1}, r),
            (RewardSample{3, 2}));
}

TEST(GameTest, RejectsNonPositiveRewards) {
  EXPECT_THROW(RewardMatrix(0, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(RewardMatrix(1, -1, 1, 1), std::invalid_argument);
  EXPECT_THROW(RewardMatrix(1, 1, std::nan(""), 1), std::invalid_argument);
  try {
    RewardMatrix(1, 1, 1, 0);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("r_b2"), std::string::npos);
  }
}

TEST(GameTest, NashEquilibriaAreTheTwoOrthogonalProfiles) {
  const std::vector<std::pair<int, int>> expected = {{0, 1}, {1, 0}};
  for (const auto& r : {std::array<double, 4>{1, 1, 1, 1},
                        std::array<double, 4>{5, 1, 1, 5},
                        std::array<double, 4>{1, 5, 5, 1}}) {
    ASSERT_EQ(BruteForceEquilibria(r), expected);
    EXPECT_EQ(AsPairs(NashEquilibria(RewardMatrix(r))), expected);
  }
}

// Random positive matrices and positive rescalings of them.
TEST(GameTest, EquilibriaMatchEnumerationAndAreScaleInvariant) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(1e-3, 10.0);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int n = 0; n < 500; ++n) {
    const std::array<double, 4> r = {u(gen), u(gen), u(gen), u(gen)};
    const RewardMatrix m(r);
    const auto eq = NashEquilibria(m);
    EXPECT_EQ(AsPairs(eq), BruteForceEquilibria(r));
    EXPECT_EQ(NashEquilibria(m.Scaled(scale(gen))), eq);
  }
}

TEST(GameTest, RealizedRewardIsZeroOrOwnChannelReward) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int n = 0; n < 200; ++n) {
    const RewardMatrix m(u(gen), u(gen), u(gen), u(gen));
    for (Channel a : kChannels) {
      for (Channel b : kChannels) {
        const RewardSample s = RealizeRewards({a, b}, m);
        EXPECT_TRUE(s.reward_a == 0.0 || s.reward_a == m.at(UserId::kA, a));
        EXPECT_TRUE(s.reward_b == 0.0 || s.reward_b == m.at(UserId::kB, b));
        if (a == b) EXPECT_EQ(s, (RewardSample{0, 0}));
      }
    }
  }
}

}  // namespace
}  // namespace cogniq
