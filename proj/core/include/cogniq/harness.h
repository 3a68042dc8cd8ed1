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

#ifndef COGNIQ_HARNESS_H_
#define COGNIQ_HARNESS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cogniq/dynamics.h"
#include "cogniq/game.h"
#include "cogniq/learner.h"
#include "cogniq/policy.h"

namespace cogniq {

struct ExperimentConfig {
  enum class QInit { kUniformRandom, kFixed };

  RewardMatrix rewards{1.0, 1.0, 1.0, 1.0};
  PolicyParams policy;
  StepSchedule schedule;
  std::int64_t horizon = 5000;
  std::int64_t num_runs = 1000;
  std::uint64_t master_seed = 0;
  QInit q_init_mode = QInit::kUniformRandom;
  QState q_init;  // used when q_init_mode == kFixed
  double delay_threshold = 0.95;

  // Throws std::invalid_argument naming the offending field.
  void Validate() const;

  LearnerPair learners() const {
    return LearnerPair::Symmetric({schedule, policy});
  }
};

// State after round t, together with the actions and rewards of round t.
struct TrajectoryRecord {
  std::int64_t t = 0;
  QState q;
  double mu_a = 0.0;
  double mu_b = 0.0;
  double p_a1 = 0.0;
  double p_b1 = 0.0;
  JointAction actions;
  RewardSample rewards;
  Region region = Region::kBoundary;
};

struct SummaryStats {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
  std::int64_t count = 0;
};

struct RunResult {
  std::vector<TrajectoryRecord> trajectory;
  // First round after which one user's channel-1 probability exceeds the
  // threshold and the other's is below 1 - threshold; 0 when the initial
  // state already qualifies; empty when the horizon ends first.
  std::optional<std::int64_t> learning_delay;
  Region terminal_region = Region::kBoundary;
  std::int64_t collision_count = 0;
  QState initial_q;
  QState final_q;
  // p_a1 over the final horizon / 2 rounds.
  SummaryStats tail_p_a1;
};

struct RunOptions {
  bool keep_trajectory = true;
};

// Worker count: `requested` if positive, otherwise the hardware
// concurrency.
int ResolveThreads(int requested);

// Calls fn(i) for every i in [0, n) on up to `threads` workers.
void ParallelFor(std::int64_t n, int threads,
                 const std::function<void(std::int64_t)>& fn);

bool LearningCompleted(double p_a1, double p_b1, double threshold);

// Draws the initial state for a run: fixed, or each entry uniform on
// [0, max reward].
QState InitialState(const ExperimentConfig& cfg, Rng& rng);

// Executes cfg.horizon rounds on the stream SubstreamSeed(master_seed,
// grid_index, run_index).
RunResult RunOnce(const ExperimentConfig& cfg, std::int64_t run_index,
                  std::int64_t grid_index = 0, RunOptions options = {});

// All cfg.num_runs runs, ordered by run index regardless of thread count.
std::vector<RunResult> RunMany(const ExperimentConfig& cfg,
                               std::int64_t grid_index = 0, int threads = 0,
                               RunOptions options = {.keep_trajectory = false});

// Empirical CDF of learning delays. Runs that never completed are kept as
// censored mass: cdf() saturates at 1 - censored_fraction().
class DelayCdf {
 public:
  DelayCdf() = default;
  explicit DelayCdf(std::span<const std::optional<std::int64_t>> delays);
  static DelayCdf FromResults(std::span<const RunResult> results);

  // Distinct completed delays, ascending, and the CDF value at each.
  const std::vector<std::int64_t>& delays() const { return delays_; }
  const std::vector<double>& cdf() const { return cdf_; }

  double Evaluate(std::int64_t delay) const;
  double censored_fraction() const { return censored_fraction_; }
  std::int64_t num_runs() const { return num_runs_; }
  std::int64_t num_censored() const { return num_censored_; }
  std::int64_t num_completed() const { return num_runs_ - num_censored_; }

  // Smallest delay d with CDF(d) >= p; empty if censoring keeps the CDF
  // below p.
  std::optional<std::int64_t> Quantile(double p) const;
  std::optional<std::int64_t> Median() const { return Quantile(0.5); }
  // Mean over completed runs.
  std::optional<double> MeanCompleted() const;

 private:
  std::vector<std::int64_t> delays_;
  std::vector<double> cdf_;
  double censored_fraction_ = 0.0;
  double completed_sum_ = 0.0;
  std::int64_t num_runs_ = 0;
  std::int64_t num_censored_ = 0;
};

struct SweepCell {
  std::int64_t grid_index = 0;
  double alpha0 = 0.0;
  double gamma = 0.0;
  DelayCdf cdf;
};

// One delay CDF per (alpha0, gamma) pair. Cell k = i_alpha * |gammas| +
// i_gamma uses grid_index k for its substreams.
std::vector<SweepCell> Sweep(const ExperimentConfig& base,
                             std::span<const double> alpha0s,
                             std::span<const double> gammas, int threads = 0);

// Mean and standard deviation of p_a1 over the final `fraction` of the
// recorded rounds.
SummaryStats SteadyStateStats(std::span<const TrajectoryRecord> trajectory,
                              double fraction = 0.5);

struct FluctuationResult {
  RunResult run;
  SummaryStats p_a1;  // over the final 50% of rounds
};

// A single run with floored step size and exploration. Rejects configs
// without both floors.
FluctuationResult FluctuationStudy(const ExperimentConfig& cfg,
                                   std::int64_t run_index = 0,
                                   std::int64_t grid_index = 0);

}  // namespace cogniq

#endif  // COGNIQ_HARNESS_H_
