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

#ifndef COGNIQ_CONFIG_H_
#define COGNIQ_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cogniq/harness.h"
#include "cogniq/ode.h"

namespace cogniq {

// Everything one config file can carry: the experiment itself plus the
// settings of the tool commands that consume it.
//
// The file is a flat JSON object. Experiment keys: rewards ([a1,a2,b1,b2]),
// gamma, explore_floor, schedule ("vanishing" | "floored"), alpha0,
// alpha_floor, step_index ("global_round" | "selection_count"), horizon,
// num_runs, master_seed, q_init_mode ("uniform_random" | "fixed"), q_init
// ([4]), delay_threshold. Tool keys: export_trajectories, sweep_alpha0,
// sweep_gamma, ode_step_h, ode_max_time, ode_stop_tol, ode_record_every,
// stationary_tol, stationary_max_iter, verify_samples. Any other key is an
// error.
struct ConfigFile {
  ExperimentConfig experiment;
  // Number of runs (from index 0) whose trajectory CSVs `simulate` writes.
  std::int64_t export_trajectories = 1;
  std::vector<double> sweep_alpha0{0.5, 1.0};
  std::vector<double> sweep_gamma{0.1};
  OdeConfig ode;
  double stationary_tol = 1e-10;
  std::int64_t stationary_max_iter = 100000;
  std::int64_t verify_samples = 100;
};

// Raised for malformed or invalid configs; field() names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

ConfigFile ParseConfig(std::string_view json_text);
ConfigFile LoadConfig(const std::filesystem::path& path);

}  // namespace cogniq

#endif  // COGNIQ_CONFIG_H_
