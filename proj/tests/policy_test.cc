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

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

namespace cogniq {
namespace {

// 1 / (1 + e^{-5}) and 1 / (1 + e^{-8}) evaluated with 40-digit arithmetic.
constexpr double kP5 = 0.99330714907571514444;
constexpr double kP8 = 0.99966464986953352190;

TEST(PolicyTest, SymmetricQGivesOneHalf) {
  EXPECT_EQ(Channel1Probability({1, 1}, {.gamma = 0.1}), 0.5);
}

TEST(PolicyTest, MatchesHighPrecisionBoltzmann) {
  EXPECT_NEAR(Channel1Probability({1.0, 0.5}, {.gamma = 0.1}), kP5, 1e-15);
  EXPECT_NEAR(Channel1Probability({0.9, 0.1}, {.gamma = 0.1}), kP8, 1e-15);
}

TEST(PolicyTest, FloorClampsProbability) {
  EXPECT_EQ(Channel1Probability({1.0, 0.5}, {.gamma = 0.1, .explore_floor = 0.2}),
            0.8);
  EXPECT_EQ(Channel1Probability({0.5, 1.0}, {.gamma = 0.1, .explore_floor = 0.2}),
            0.2);
}

TEST(PolicyTest, ArgmaxLimitWithoutOverflow) {
  const double p = Channel1Probability({10, 0}, {.gamma = 1e-3});
  EXPECT_TRUE(std::isfinite(p));
  EXPECT_NEAR(p, 1.0, 1e-12);
  // Exponent ratios of 1e4 and beyond.
  EXPECT_EQ(Channel1Probability({0, 10}, {.gamma = 1e-3}), 0.0);
  EXPECT_TRUE(std::isfinite(Channel1Probability({1e6, -1e6}, {.gamma = 1e-9})));
}

TEST(PolicyTest, RejectsInvalidInput) {
  EXPECT_THROW(Channel1Probability({1, 1}, {.gamma = 0.0}),
               std::invalid_argument);
  EXPECT_THROW(Channel1Probability({1, 1}, {.gamma = -1.0}),
               std::invalid_argument);
  EXPECT_THROW(Channel1Probability({1, 1}, {.gamma = 0.1, .explore_floor = 0.5}),
               std::invalid_argument);
  EXPECT_THROW(Channel1Probability({NAN, 1}, {.gamma = 0.1}),
               std::invalid_argument);
  EXPECT_THROW(Channel1Probability({INFINITY, 1}, {.gamma = 0.1}),
               std::invalid_argument);
}

TEST(PolicyTest, SamplingFrequencyMatchesProbability) {
  struct Case {
    UserQ q;
    double expected;
    double tol;
  };
  for (const Case& c : {Case{{1, 1}, 0.5, 0.002}, Case{{1.0, 0.5}, kP5, 3e-4}}) {
    Rng rng(2024);
    constexpr int kDraws = 1'000'000;
    int ch1 = 0;
    for (int n = 0; n < kDraws; ++n) {
      ch1 += SampleAction(c.q, {.gamma = 0.1}, rng) == Channel::kCh1;
    }
    EXPECT_NEAR(static_cast<double>(ch1) / kDraws, c.expected, c.tol);
  }
}

TEST(PolicyTest, SamplingConsumesOneDrawAndIsDeterministic) {
  Rng a(99), b(99), reference(99);
  std::vector<Channel> first, second;
  for (int n = 0; n < 1000; ++n) {
    const UserQ q{0.3 + 0.001 * n, 0.6};
    first.push_back(SampleAction(q, {.gamma = 0.1}, a));
    second.push_back(SampleAction(q, {.gamma = 0.1}, b));
    const double u = reference.Uniform();
    EXPECT_EQ(first.back(), u < Channel1Probability(q, {.gamma = 0.1})
                                ? Channel::kCh1
                                : Channel::kCh2);
  }
  EXPECT_EQ(first, second);
}

TEST(PolicyTest, ExpectedRewardIsRewardTimesOpponentOtherChannel) {
  const RewardMatrix r(1, 1, 1, 1);
  EXPECT_EQ(ExpectedReward(UserId::kA, Channel::kCh1, {1, 1}, r, {.gamma = 0.1}),
            0.5);
  EXPECT_NEAR(
      ExpectedReward(UserId::kA, Channel::kCh1, {0.5, 1.0}, r, {.gamma = 0.1}),
      kP5, 1e-15);
  EXPECT_EQ(ExpectedReward(0.0, Channel::kCh1, {0.2, 0.9}, {.gamma = 0.1}), 0.0);
  EXPECT_THROW(ExpectedReward(1.0, Channel::kCh1, {0.2, 0.9},
                              {.gamma = 0.1, .explore_floor = 0.1}),
               std::invalid_argument);
}

class PolicyPropertyTest : public ::testing::Test {
 protected:
  std::mt19937_64 gen_{31337};
  double Uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
};

TEST_F(PolicyPropertyTest, ProbabilitiesSumToOne) {
  for (int n = 0; n < 10000; ++n) {
    const UserQ q{Uniform(-5, 5), Uniform(-5, 5)};
    const PolicyParams p{.gamma = Uniform(1e-3, 2), .explore_floor = Uniform(0, 0.49)};
    EXPECT_EQ(ChannelProbability(Channel::kCh1, q, p) +
                  ChannelProbability(Channel::kCh2, q, p),
              1.0);
  }
}

TEST_F(PolicyPropertyTest, TranslationInvariance) {
  for (int n = 0; n < 10000; ++n) {
    const UserQ q{Uniform(0, 1), Uniform(0, 1)};
    const double shift = Uniform(-10, 10);
    const PolicyParams p{.gamma = Uniform(0.01, 1)};
    EXPECT_NEAR(Channel1Probability(q, p),
                Channel1Probability({q.q1 + shift, q.q2 + shift}, p), 1e-12);
  }
}

TEST_F(PolicyPropertyTest, JointScaleInvariance) {
  for (int n = 0; n < 10000; ++n) {
    const UserQ q{Uniform(0, 1), Uniform(0, 1)};
    const double gamma = Uniform(0.01, 1);
    const double c = std::exp(Uniform(-7, 7));
    EXPECT_NEAR(Channel1Probability(q, {.gamma = gamma}),
                Channel1Probability({c * q.q1, c * q.q2}, {.gamma = c * gamma}),
                1e-12);
  }
}

TEST_F(PolicyPropertyTest, Monotonicity) {
  for (int n = 0; n < 5000; ++n) {
    const double q2 = Uniform(0, 1);
    const double q1 = q2 + Uniform(1e-3, 0.5);
    const double gamma = Uniform(0.05, 1);
    const PolicyParams p{.gamma = gamma};
    EXPECT_GT(Channel1Probability({q1 + 0.01, q2}, p), Channel1Probability({q1, q2}, p));
    EXPECT_GT(Channel1Probability({q1, q2}, {.gamma = 0.9 * gamma}),
              Channel1Probability({q1, q2}, p));
  }
}

TEST_F(PolicyPropertyTest, FloorBoundsOutput) {
  for (int n = 0; n < 10000; ++n) {
    const double floor = Uniform(0, 0.49);
    const double p = Channel1Probability({Uniform(-3, 3), Uniform(-3, 3)},
                                         {.gamma = Uniform(1e-3, 1), .explore_floor = floor});
    EXPECT_GE(p, floor);
    EXPECT_LE(p, 1.0 - floor);
  }
}

TEST_F(PolicyPropertyTest, SoftmaxProductBelowOneQuarter) {
  for (int n = 0; n < 10000; ++n) {
    const double x = Uniform(-50, 50), y = Uniform(-50, 50);
    const double gamma = Uniform(1e-3, 5);
    const double s = softmax::ProductTerm(x, y, gamma);
    EXPECT_LE(s, 0.25);
    EXPECT_GE(s, 0.0);
    const double p = softmax::FirstProbability(x, y, gamma);
    EXPECT_NEAR(s, p * (1 - p), 1e-15);
  }
}

}  // namespace
}  // namespace cogniq
