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

#include "cogniq/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "cogniq/random.h"

namespace cogniq {

void ExperimentConfig::Validate() const {
  policy.Validate();
  schedule.Validate();
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (num_runs < 1) throw std::invalid_argument("num_runs must be >= 1");
  if (!(delay_threshold > 0.5 && delay_threshold < 1.0)) {
    throw std::invalid_argument("delay_threshold must lie in (0.5, 1)");
  }
  if (q_init_mode == QInit::kFixed && !q_init.IsFinite()) {
    throw std::invalid_argument("q_init must be finite");
  }
}

int ResolveThreads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void ParallelFor(std::int64_t n, int threads,
                 const std::function<void(std::int64_t)>& fn) {
  if (n <= 0) return;
  const int workers =
      static_cast<int>(std::min<std::int64_t>(ResolveThreads(threads), n));
  if (workers == 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::int64_t i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mu);
            if (!error) error = std::current_exception();
            next = n;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

bool LearningCompleted(double p_a1, double p_b1, double threshold) {
  const double low = 1.0 - threshold;
  return (p_a1 > threshold && p_b1 < low) || (p_b1 > threshold && p_a1 < low);
}

QState InitialState(const ExperimentConfig& cfg, Rng& rng) {
  if (cfg.q_init_mode == ExperimentConfig::QInit::kFixed) return cfg.q_init;
  const double r_max = cfg.rewards.max();
  QState q;
  for (int k = 0; k < 4; ++k) q[k] = rng.Uniform() * r_max;
  return q;
}

RunResult RunOnce(const ExperimentConfig& cfg, std::int64_t run_index,
                  std::int64_t grid_index, RunOptions options) {
  cfg.Validate();
  Rng rng(SubstreamSeed(cfg.master_seed, static_cast<std::uint64_t>(grid_index),
                        static_cast<std::uint64_t>(run_index)));
  const LearnerPair learners = cfg.learners();
  const bool needs_counts =
      cfg.schedule.index == StepSchedule::Index::kSelectionCount;
  SelectionCounts counts{};

  RunResult result;
  result.initial_q = InitialState(cfg, rng);
  QState q = result.initial_q;
  {
    const double p_a1 = Channel1Probability(q.user(UserId::kA), cfg.policy);
    const double p_b1 = Channel1Probability(q.user(UserId::kB), cfg.policy);
    if (LearningCompleted(p_a1, p_b1, cfg.delay_threshold)) {
      result.learning_delay = 0;
    }
  }
  if (options.keep_trajectory) {
    result.trajectory.reserve(static_cast<std::size_t>(cfg.horizon));
  }

  const std::int64_t tail_start = cfg.horizon - std::max<std::int64_t>(
                                                    cfg.horizon / 2, 1) + 1;
  // Welford accumulators; the tail variance can be ~1e-14 around a mean
  // near 1.
  double tail_mean = 0.0;
  double tail_m2 = 0.0;
  std::int64_t tail_n = 0;

  for (std::int64_t t = 1; t <= cfg.horizon; ++t) {
    const RoundOutcome round = PlayRound(q, learners, cfg.rewards, t, rng,
                                         needs_counts ? &counts : nullptr);
    q = round.q;
    if (round.actions.collides()) ++result.collision_count;
    const double p_a1 = Channel1Probability(q.user(UserId::kA), cfg.policy);
    const double p_b1 = Channel1Probability(q.user(UserId::kB), cfg.policy);
    if (!result.learning_delay &&
        LearningCompleted(p_a1, p_b1, cfg.delay_threshold)) {
      result.learning_delay = t;
    }
    if (t >= tail_start) {
      ++tail_n;
      const double delta = p_a1 - tail_mean;
      tail_mean += delta / static_cast<double>(tail_n);
      tail_m2 += delta * (p_a1 - tail_mean);
    }
    if (options.keep_trajectory) {
      TrajectoryRecord rec;
      rec.t = t;
      rec.q = q;
      rec.mu_a = PreferenceRatio(q.user(UserId::kA));
      rec.mu_b = PreferenceRatio(q.user(UserId::kB));
      rec.p_a1 = p_a1;
      rec.p_b1 = p_b1;
      rec.actions = round.actions;
      rec.rewards = round.rewards;
      rec.region = ClassifyRegion(q).region;
      result.trajectory.push_back(rec);
    }
  }
  result.final_q = q;
  result.terminal_region = ClassifyRegion(q).region;
  if (tail_n > 0) {
    result.tail_p_a1 = {tail_mean,
                        std::sqrt(tail_m2 / static_cast<double>(tail_n)),
                        tail_n};
  }
  return result;
}

std::vector<RunResult> RunMany(const ExperimentConfig& cfg,
                               std::int64_t grid_index, int threads,
                               RunOptions options) {
  cfg.Validate();
  std::vector<RunResult> results(static_cast<std::size_t>(cfg.num_runs));
  ParallelFor(cfg.num_runs, threads, [&](std::int64_t i) {
    results[static_cast<std::size_t>(i)] =
        RunOnce(cfg, i, grid_index, options);
  });
  return results;
}

DelayCdf::DelayCdf(std::span<const std::optional<std::int64_t>> delays) {
  if (delays.empty()) {
    throw std::invalid_argument("delay CDF needs at least one run");
  }
  num_runs_ = static_cast<std::int64_t>(delays.size());
  std::vector<std::int64_t> completed;
  completed.reserve(delays.size());
  for (const auto& d : delays) {
    if (d) {
      completed.push_back(*d);
      completed_sum_ += static_cast<double>(*d);
    } else {
      ++num_censored_;
    }
  }
  std::sort(completed.begin(), completed.end());
  const double n = static_cast<double>(num_runs_);
  for (std::size_t k = 0; k < completed.size(); ++k) {
    if (k + 1 < completed.size() && completed[k + 1] == completed[k]) continue;
    delays_.push_back(completed[k]);
    cdf_.push_back(static_cast<double>(k + 1) / n);
  }
  const double saturation = cdf_.empty() ? 0.0 : cdf_.back();
  censored_fraction_ = 1.0 - saturation;
}

DelayCdf DelayCdf::FromResults(std::span<const RunResult> results) {
  std::vector<std::optional<std::int64_t>> delays;
  delays.reserve(results.size());
  for (const RunResult& r : results) delays.push_back(r.learning_delay);
  return DelayCdf(delays);
}

double DelayCdf::Evaluate(std::int64_t delay) const {
  const auto it = std::upper_bound(delays_.begin(), delays_.end(), delay);
  if (it == delays_.begin()) return 0.0;
  return cdf_[static_cast<std::size_t>(it - delays_.begin()) - 1];
}

std::optional<std::int64_t> DelayCdf::Quantile(double p) const {
  for (std::size_t k = 0; k < cdf_.size(); ++k) {
    if (cdf_[k] >= p) return delays_[k];
  }
  return std::nullopt;
}

std::optional<double> DelayCdf::MeanCompleted() const {
  if (num_completed() == 0) return std::nullopt;
  return completed_sum_ / static_cast<double>(num_completed());
}

std::vector<SweepCell> Sweep(const ExperimentConfig& base,
                             std::span<const double> alpha0s,
                             std::span<const double> gammas, int threads) {
  if (alpha0s.empty() || gammas.empty()) {
    throw std::invalid_argument("sweep grid must be nonempty");
  }
  std::vector<SweepCell> cells;
  std::vector<ExperimentConfig> configs;
  for (double alpha0 : alpha0s) {
    for (double gamma : gammas) {
      ExperimentConfig cfg = base;
      cfg.schedule.alpha0 = alpha0;
      cfg.policy.gamma = gamma;
      cfg.Validate();
      SweepCell cell;
      cell.grid_index = static_cast<std::int64_t>(cells.size());
      cell.alpha0 = alpha0;
      cell.gamma = gamma;
      cells.push_back(cell);
      configs.push_back(cfg);
    }
  }
  // Flatten (cell, run) so one pool serves the whole grid.
  const std::int64_t runs = base.num_runs;
  std::vector<std::optional<std::int64_t>> delays(cells.size() *
                                                  static_cast<std::size_t>(runs));
  ParallelFor(static_cast<std::int64_t>(delays.size()), threads,
              [&](std::int64_t job) {
                const std::int64_t cell = job / runs;
                const std::int64_t run = job % runs;
                delays[static_cast<std::size_t>(job)] =
                    RunOnce(configs[static_cast<std::size_t>(cell)], run, cell,
                            {.keep_trajectory = false})
                        .learning_delay;
              });
  for (std::size_t c = 0; c < cells.size(); ++c) {
    cells[c].cdf = DelayCdf(std::span(delays).subspan(
        c * static_cast<std::size_t>(runs), static_cast<std::size_t>(runs)));
  }
  return cells;
}

SummaryStats SteadyStateStats(std::span<const TrajectoryRecord> trajectory,
                              double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw std::invalid_argument("steady-state fraction must lie in (0, 1]");
  }
  if (trajectory.empty()) return {};
  const auto n = static_cast<std::int64_t>(trajectory.size());
  const std::int64_t window = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::floor(fraction * static_cast<double>(n))));
  double sum = 0.0;
  for (std::int64_t k = n - window; k < n; ++k) sum += trajectory[k].p_a1;
  const double mean = sum / static_cast<double>(window);
  double ss = 0.0;
  for (std::int64_t k = n - window; k < n; ++k) {
    const double d = trajectory[k].p_a1 - mean;
    ss += d * d;
  }
  return {mean, std::sqrt(ss / static_cast<double>(window)), window};
}

FluctuationResult FluctuationStudy(const ExperimentConfig& cfg,
                                   std::int64_t run_index,
                                   std::int64_t grid_index) {
  if (cfg.schedule.kind != StepSchedule::Kind::kFloored ||
      !(cfg.schedule.floor > 0.0)) {
    throw std::invalid_argument(
        "fluctuation study requires a floored step schedule with floor > 0");
  }
  if (!(cfg.policy.explore_floor > 0.0)) {
    throw std::invalid_argument(
        "fluctuation study requires explore_floor > 0");
  }
  FluctuationResult out;
  out.run = RunOnce(cfg, run_index, grid_index, {.keep_trajectory = true});
  out.p_a1 = SteadyStateStats(out.run.trajectory, 0.5);
  return out;
}

}  // namespace cogniq
