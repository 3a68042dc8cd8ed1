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

#include "cogniq/config.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cogniq {
namespace {

using nlohmann::json;

const std::set<std::string>& KnownKeys() {
  static const std::set<std::string> keys = {
      "rewards",          "gamma",          "explore_floor",
      "schedule",         "alpha0",         "alpha_floor",
      "step_index",       "horizon",        "num_runs",
      "master_seed",      "q_init_mode",    "q_init",
      "delay_threshold",  "export_trajectories",
      "sweep_alpha0",     "sweep_gamma",    "ode_step_h",
      "ode_max_time",     "ode_stop_tol",   "ode_record_every",
      "stationary_tol",   "stationary_max_iter",
      "verify_samples"};
  return keys;
}

double GetDouble(const json& doc, const std::string& key, double fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_number()) throw ConfigError(key, "must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(key, "must be finite");
  return d;
}

std::int64_t GetInt(const json& doc, const std::string& key,
                    std::int64_t fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw ConfigError(key, "must be an integer");
  return v.get<std::int64_t>();
}

std::string GetString(const json& doc, const std::string& key,
                      const std::string& fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_string()) throw ConfigError(key, "must be a string");
  return v.get<std::string>();
}

std::vector<double> GetDoubles(const json& doc, const std::string& key,
                               std::vector<double> fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_array()) throw ConfigError(key, "must be an array of numbers");
  std::vector<double> out;
  for (const json& x : v) {
    if (!x.is_number()) throw ConfigError(key, "must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Vec4 GetVec4(const json& doc, const std::string& key, const Vec4& fallback) {
  if (!doc.contains(key)) return fallback;
  const std::vector<double> v = GetDoubles(doc, key, {});
  if (v.size() != 4) throw ConfigError(key, "must have exactly 4 entries");
  return {v[0], v[1], v[2], v[3]};
}

// Runs `check`, re-raising std::invalid_argument as a ConfigError on `key`.
template <typename F>
void Check(const std::string& key, F&& check) {
  try {
    check();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(key, e.what());
  }
}

}  // namespace

ConfigFile ParseConfig(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config", "must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!KnownKeys().contains(key)) throw ConfigError(key, "unknown key");
  }

  ConfigFile file;
  ExperimentConfig& exp = file.experiment;

  const Vec4 rewards = GetVec4(doc, "rewards", exp.rewards.values());
  Check("rewards", [&] { exp.rewards = RewardMatrix(rewards); });

  exp.policy.gamma = GetDouble(doc, "gamma", exp.policy.gamma);
  exp.policy.explore_floor =
      GetDouble(doc, "explore_floor", exp.policy.explore_floor);
  if (!(exp.policy.gamma > 0.0)) {
    throw ConfigError("gamma", "temperature must be strictly positive");
  }
  Check("explore_floor", [&] { exp.policy.Validate(); });

  const std::string schedule = GetString(doc, "schedule", "vanishing");
  if (schedule == "vanishing") {
    exp.schedule.kind = StepSchedule::Kind::kVanishing;
  } else if (schedule == "floored") {
    exp.schedule.kind = StepSchedule::Kind::kFloored;
  } else {
    throw ConfigError("schedule", "must be \"vanishing\" or \"floored\"");
  }
  exp.schedule.alpha0 = GetDouble(doc, "alpha0", exp.schedule.alpha0);
  exp.schedule.floor = GetDouble(doc, "alpha_floor", exp.schedule.floor);
  if (!(exp.schedule.alpha0 > 0.0 && exp.schedule.alpha0 <= 1.0)) {
    throw ConfigError("alpha0", "must lie in (0, 1]");
  }
  Check("alpha_floor", [&] { exp.schedule.Validate(); });

  const std::string index = GetString(doc, "step_index", "global_round");
  if (index == "global_round") {
    exp.schedule.index = StepSchedule::Index::kGlobalRound;
  } else if (index == "selection_count") {
    exp.schedule.index = StepSchedule::Index::kSelectionCount;
  } else {
    throw ConfigError("step_index",
                      "must be \"global_round\" or \"selection_count\"");
  }

  exp.horizon = GetInt(doc, "horizon", exp.horizon);
  if (exp.horizon < 1) throw ConfigError("horizon", "must be >= 1");
  exp.num_runs = GetInt(doc, "num_runs", exp.num_runs);
  if (exp.num_runs < 1) throw ConfigError("num_runs", "must be >= 1");

  if (doc.contains("master_seed")) {
    const json& v = doc.at("master_seed");
    if (!v.is_number_integer() ||
        (v.is_number_integer() && !v.is_number_unsigned() &&
         v.get<std::int64_t>() < 0)) {
      throw ConfigError("master_seed", "must be a non-negative 64-bit integer");
    }
    exp.master_seed = v.get<std::uint64_t>();
  }

  const std::string init = GetString(doc, "q_init_mode", "uniform_random");
  if (init == "uniform_random") {
    exp.q_init_mode = ExperimentConfig::QInit::kUniformRandom;
  } else if (init == "fixed") {
    exp.q_init_mode = ExperimentConfig::QInit::kFixed;
    if (!doc.contains("q_init")) {
      throw ConfigError("q_init", "required when q_init_mode is \"fixed\"");
    }
  } else {
    throw ConfigError("q_init_mode",
                      "must be \"uniform_random\" or \"fixed\"");
  }
  exp.q_init = QState(GetVec4(doc, "q_init", exp.q_init.values()));

  exp.delay_threshold = GetDouble(doc, "delay_threshold", exp.delay_threshold);
  if (!(exp.delay_threshold > 0.5 && exp.delay_threshold < 1.0)) {
    throw ConfigError("delay_threshold", "must lie in (0.5, 1)");
  }
  Check("config", [&] { exp.Validate(); });

  file.export_trajectories =
      GetInt(doc, "export_trajectories", file.export_trajectories);
  if (file.export_trajectories < 0) {
    throw ConfigError("export_trajectories", "must be >= 0");
  }
  file.sweep_alpha0 = GetDoubles(doc, "sweep_alpha0", file.sweep_alpha0);
  file.sweep_gamma = GetDoubles(doc, "sweep_gamma", file.sweep_gamma);
  if (file.sweep_alpha0.empty()) {
    throw ConfigError("sweep_alpha0", "must be nonempty");
  }
  if (file.sweep_gamma.empty()) {
    throw ConfigError("sweep_gamma", "must be nonempty");
  }
  for (double a : file.sweep_alpha0) {
    if (!(a > 0.0 && a <= 1.0)) {
      throw ConfigError("sweep_alpha0", "entries must lie in (0, 1]");
    }
  }
  for (double g : file.sweep_gamma) {
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw ConfigError("sweep_gamma",
                        "temperature entries must be strictly positive");
    }
  }

  file.ode.step_h = GetDouble(doc, "ode_step_h", file.ode.step_h);
  file.ode.max_time = GetDouble(doc, "ode_max_time", file.ode.max_time);
  file.ode.stop_tol = GetDouble(doc, "ode_stop_tol", file.ode.stop_tol);
  file.ode.record_every =
      GetInt(doc, "ode_record_every", file.ode.record_every);
  Check("ode", [&] { file.ode.Validate(); });

  file.stationary_tol = GetDouble(doc, "stationary_tol", file.stationary_tol);
  if (!(file.stationary_tol > 0.0)) {
    throw ConfigError("stationary_tol", "must be > 0");
  }
  file.stationary_max_iter =
      GetInt(doc, "stationary_max_iter", file.stationary_max_iter);
  if (file.stationary_max_iter < 1) {
    throw ConfigError("stationary_max_iter", "must be >= 1");
  }
  file.verify_samples = GetInt(doc, "verify_samples", file.verify_samples);
  if (file.verify_samples < 1) {
    throw ConfigError("verify_samples", "must be >= 1");
  }
  return file;
}

ConfigFile LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config", "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return ParseConfig(text.str());
}

}  // namespace cogniq
