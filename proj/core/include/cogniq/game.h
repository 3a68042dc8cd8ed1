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

#ifndef COGNIQ_GAME_H_
#define COGNIQ_GAME_H_

#include <array>
#include <string_view>
#include <vector>

namespace cogniq {

// The two secondary users sharing the band.
enum class UserId { kA = 0, kB = 1 };

// The two (idle) channels a user may transmit on.
enum class Channel { kCh1 = 0, kCh2 = 1 };

inline constexpr std::array<UserId, 2> kUsers = {UserId::kA, UserId::kB};
inline constexpr std::array<Channel, 2> kChannels = {Channel::kCh1,
                                                     Channel::kCh2};

constexpr UserId Other(UserId user) {
  return user == UserId::kA ? UserId::kB : UserId::kA;
}
constexpr Channel Other(Channel channel) {
  return channel == Channel::kCh1 ? Channel::kCh2 : Channel::kCh1;
}

constexpr int Index(UserId user) { return static_cast<int>(user); }
constexpr int Index(Channel channel) { return static_cast<int>(channel); }

// Flat index into (A1, A2, B1, B2) ordered vectors.
constexpr int Index(UserId user, Channel channel) {
  return 2 * Index(user) + Index(channel);
}

std::string_view ToString(UserId user);
// "1" or "2", the form used in CSV output.
std::string_view ToString(Channel channel);

// Per-user, per-channel rewards for a successful (collision-free)
// transmission. Entries must be finite and strictly positive; a value is
// fixed for the lifetime of a game.
class RewardMatrix {
 public:
  // Throws std::invalid_argument naming the offending entry.
  RewardMatrix(double r_a1, double r_a2, double r_b1, double r_b2);
  explicit RewardMatrix(const std::array<double, 4>& values);

  double at(UserId user, Channel channel) const {
    return values_[Index(user, channel)];
  }
  const std::array<double, 4>& values() const { return values_; }
  double max() const;

  // All entries multiplied by `factor` (> 0).
  RewardMatrix Scaled(double factor) const;

  friend bool operator==(const RewardMatrix&, const RewardMatrix&) = default;

 private:
  std::array<double, 4> values_;
};

struct JointAction {
  Channel action_a = Channel::kCh1;
  Channel action_b = Channel::kCh1;

  Channel of(UserId user) const {
    return user == UserId::kA ? action_a : action_b;
  }
  bool collides() const { return action_a == action_b; }

  friend bool operator==(const JointAction&, const JointAction&) = default;
  friend auto operator<=>(const JointAction&, const JointAction&) = default;
};

struct RewardSample {
  double reward_a = 0.0;
  double reward_b = 0.0;

  double of(UserId user) const {
    return user == UserId::kA ? reward_a : reward_b;
  }
  friend bool operator==(const RewardSample&, const RewardSample&) = default;
};

// Users on the same channel collide and both receive zero; otherwise each
// user receives its reward for the channel it picked.
RewardSample RealizeRewards(const JointAction& actions,
                            const RewardMatrix& rewards);

// Pure-strategy Nash equilibria found by checking every unilateral deviation
// over the four joint actions. Returned in ascending (action_a, action_b)
// order.
std::vector<JointAction> NashEquilibria(const RewardMatrix& rewards);

}  // namespace cogniq

#endif  // COGNIQ_GAME_H_
