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

#include <cstdint>

#include "benchmark/benchmark.h"
#include "cogniq/dynamics.h"
#include "cogniq/harness.h"
#include "cogniq/learner.h"
#include "cogniq/ode.h"
#include "cogniq/random.h"

namespace cogniq {
namespace {

const MeanField kUnit(RewardMatrix(1, 1, 1, 1), 0.1);

void BM_PlayRound(benchmark::State& state) {
  const LearnerPair learners = LearnerPair::Symmetric({});
  const RewardMatrix rewards(1, 1, 1, 1);
  Rng rng(1);
  QState q(0.3, 0.6, 0.7, 0.2);
  std::int64_t t = 1;
  for (auto _ : state) {
    q = PlayRound(q, learners, rewards, t++, rng).q;
    benchmark::DoNotOptimize(q);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PlayRound);

void BM_RunOnce(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.horizon = state.range(0);
  std::int64_t run = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunOnce(cfg, run++, 0, {.keep_trajectory = false}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunOnce)->Arg(500)->Arg(5000);

void BM_RunOnceWithTrajectory(benchmark::State& state) {
  ExperimentConfig cfg;
  std::int64_t run = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunOnce(cfg, run++));
  }
  state.SetItemsProcessed(state.iterations() * cfg.horizon);
}
BENCHMARK(BM_RunOnceWithTrajectory);

void BM_Integrate(benchmark::State& state) {
  const MeanField mf(RewardMatrix(0.18, 0.1, 0.15, 0.12), 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Integrate(QState(0.1, 0.05, 0.1, 0.05), mf, {}));
  }
}
BENCHMARK(BM_Integrate)->Unit(benchmark::kMillisecond);

void BM_SolveStationary(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveStationary(kUnit, QState(0.9, 0.1, 0.8, 0.2)));
  }
}
BENCHMARK(BM_SolveStationary);

void BM_Lyapunov(benchmark::State& state) {
  const QState q(0.3, 0.6, 0.7, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(Lyapunov(q, kUnit));
}
BENCHMARK(BM_Lyapunov);

}  // namespace
}  // namespace cogniq

BENCHMARK_MAIN();
