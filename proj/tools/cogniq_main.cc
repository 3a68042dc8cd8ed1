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

// cogniq: run channel-selection learning experiments and mean-field
// analyses from a JSON config file.
//
//   cogniq simulate   --config exp.json --out results/
//   cogniq sweep      --config exp.json --out results/
//   cogniq ode        --config exp.json --out results/
//   cogniq stationary --config exp.json --out results/
//   cogniq verify     --config exp.json [--inject-fault]
//
// COGNIQ_THREADS caps the worker count (0 or unset = all cores).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cogniq/config.h"
#include "cogniq/csv.h"
#include "cogniq/dynamics.h"
#include "cogniq/harness.h"
#include "cogniq/ode.h"
#include "cogniq/verify.h"

namespace fs = std::filesystem;

namespace cogniq {
namespace {

struct Options {
  std::string config;
  std::string out;  // empty: "cogniq_out", or no report for verify
  bool quiet = false;
  bool inject_fault = false;
};

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int ThreadsFromEnv() {
  const char* env = std::getenv("COGNIQ_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 0) {
    throw Failure("COGNIQ_THREADS must be a non-negative integer");
  }
  return static_cast<int>(n);
}

fs::path PrepareOut(std::string dir) {
  if (dir.empty()) dir = "cogniq_out";
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw Failure("cannot create output directory " + dir);
  }
  return fs::path(dir);
}

void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  out.close();
  if (!out) throw Failure("cannot write " + path.string());
}

std::string OptionalToString(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "none";
}

std::string OptionalToString(const std::optional<double>& v) {
  return v ? FormatDouble(*v) : "none";
}

std::string SummaryJson(const ExperimentConfig& cfg,
                        const std::vector<RunResult>& runs,
                        const DelayCdf& cdf) {
  std::array<std::int64_t, 5> regions{};
  double collisions = 0.0;
  double tail_std = 0.0;
  for (const RunResult& r : runs) {
    ++regions[static_cast<int>(r.terminal_region)];
    collisions += static_cast<double>(r.collision_count);
    tail_std += r.tail_p_a1.stddev;
  }
  const double n = static_cast<double>(runs.size());
  std::ostringstream s;
  s << "{\n"
    << "  \"num_runs\": " << runs.size() << ",\n"
    << "  \"horizon\": " << cfg.horizon << ",\n"
    << "  \"delay_threshold\": " << FormatDouble(cfg.delay_threshold) << ",\n"
    << "  \"completed\": " << cdf.num_completed() << ",\n"
    << "  \"censored_fraction\": " << FormatDouble(cdf.censored_fraction())
    << ",\n"
    << "  \"median_delay\": "
    << (cdf.Median() ? std::to_string(*cdf.Median()) : "null") << ",\n"
    << "  \"mean_delay\": "
    << (cdf.MeanCompleted() ? FormatDouble(*cdf.MeanCompleted()) : "null")
    << ",\n"
    << "  \"mean_collisions\": "
    << FormatDouble(collisions / n) << ",\n"
    // Steady-state spread of p_a1 over the final half of each run.
    << "  \"mean_tail_p_a1_stddev\": " << FormatDouble(tail_std / n) << ",\n"
    << "  \"terminal_regions\": {";
  for (int k = 0; k < 5; ++k) {
    s << (k ? ", " : "") << '"' << ToString(static_cast<Region>(k))
      << "\": " << regions[k];
  }
  s << "}\n}\n";
  return s.str();
}

int Simulate(const Options& opt) {
  const ConfigFile file = LoadConfig(opt.config);
  const ExperimentConfig& cfg = file.experiment;
  const fs::path out = PrepareOut(opt.out);
  const int threads = ThreadsFromEnv();

  std::vector<RunResult> runs = RunMany(cfg, 0, threads);
  const std::int64_t exported =
      std::min<std::int64_t>(file.export_trajectories, cfg.num_runs);
  // Re-running a run reproduces it exactly; only exported runs keep their
  // trajectories in memory.
  for (std::int64_t i = 0; i < exported; ++i) {
    const RunResult full = RunOnce(cfg, i, 0, {.keep_trajectory = true});
    WriteFile(out / ("trajectory_run" + std::to_string(i) + ".csv"),
              TrajectoryCsv(full.trajectory));
  }
  const DelayCdf cdf = DelayCdf::FromResults(runs);
  WriteFile(out / "delay_cdf.csv", DelayCdfCsv(cdf));
  const std::string summary = SummaryJson(cfg, runs, cdf);
  WriteFile(out / "summary.json", summary);
  if (!opt.quiet) std::cout << summary;
  return 0;
}

int RunSweep(const Options& opt) {
  const ConfigFile file = LoadConfig(opt.config);
  const fs::path out = PrepareOut(opt.out);
  const std::vector<SweepCell> cells = Sweep(
      file.experiment, file.sweep_alpha0, file.sweep_gamma, ThreadsFromEnv());
  std::ostringstream table;
  table << "cell,alpha0,gamma,completed,censored_fraction,median_delay,"
           "mean_delay\n";
  for (const SweepCell& cell : cells) {
    WriteFile(out / ("delay_cdf_cell" + std::to_string(cell.grid_index) +
                     ".csv"),
              DelayCdfCsv(cell.cdf));
    table << cell.grid_index << ',' << FormatDouble(cell.alpha0) << ','
          << FormatDouble(cell.gamma) << ',' << cell.cdf.num_completed()
          << ',' << FormatDouble(cell.cdf.censored_fraction()) << ','
          << OptionalToString(cell.cdf.Median()) << ','
          << OptionalToString(cell.cdf.MeanCompleted()) << '\n';
  }
  WriteFile(out / "sweep_summary.csv", table.str());
  if (!opt.quiet) std::cout << table.str();
  return 0;
}

QState StartState(const ExperimentConfig& cfg) {
  Rng rng(SubstreamSeed(cfg.master_seed, 0, 0));
  return InitialState(cfg, rng);
}

int RunOde(const Options& opt) {
  const ConfigFile file = LoadConfig(opt.config);
  const ExperimentConfig& cfg = file.experiment;
  const fs::path out = PrepareOut(opt.out);
  const MeanField mf(cfg.rewards, cfg.policy.gamma);
  const OdeTrace trace = Integrate(StartState(cfg), mf, file.ode);
  std::ostringstream csv;
  WriteOdeTraceCsv(csv, trace, mf);
  WriteFile(out / "ode_trace.csv", csv.str());
  if (!opt.quiet) {
    const QState& q = trace.final_state();
    std::cout << "stop: "
              << (trace.stop == OdeTrace::Stop::kConverged ? "converged"
                                                           : "max_time")
              << "\nsteps: " << trace.steps
              << "\nresidual: " << FormatDouble(trace.final_residual)
              << "\nfinal_q: " << FormatDouble(q[0]) << ' '
              << FormatDouble(q[1]) << ' ' << FormatDouble(q[2]) << ' '
              << FormatDouble(q[3])
              << "\nregion: " << ToString(trace.regions.back()) << '\n';
  }
  return 0;
}

int RunStationary(const Options& opt) {
  const ConfigFile file = LoadConfig(opt.config);
  const ExperimentConfig& cfg = file.experiment;
  const fs::path out = PrepareOut(opt.out);
  const MeanField mf(cfg.rewards, cfg.policy.gamma);
  const StationaryResult res = SolveStationary(
      mf, StartState(cfg), file.stationary_tol, file.stationary_max_iter);
  std::ostringstream csv;
  csv << "q_a1,q_a2,q_b1,q_b2,residual,iterations,converged,region\n";
  for (double v : res.q.values()) csv << FormatDouble(v) << ',';
  csv << FormatDouble(res.residual) << ',' << res.iterations << ','
      << (res.converged ? "true" : "false") << ','
      << ToString(ClassifyRegion(res.q).region) << '\n';
  WriteFile(out / "stationary.csv", csv.str());
  if (!opt.quiet) std::cout << csv.str();
  if (!res.converged) {
    std::cerr << "stationary solver did not converge within "
              << file.stationary_max_iter << " iterations\n";
    return 1;
  }
  return 0;
}

int RunVerify(const Options& opt) {
  const ConfigFile file = LoadConfig(opt.config);
  const ExperimentConfig& cfg = file.experiment;
  const MeanField mf(cfg.rewards, cfg.policy.gamma);
  VerifyOptions vopt;
  vopt.samples = file.verify_samples;
  vopt.seed = cfg.master_seed;
  vopt.stationary_tol = file.stationary_tol;
  vopt.stationary_max_iter = file.stationary_max_iter;
  vopt.ode = file.ode;
  vopt.inject_c12_sign_fault = opt.inject_fault;
  bool ok = true;
  std::ostringstream report;
  for (const CheckResult& check : RunVerification(mf, vopt)) {
    ok = ok && check.passed;
    report << (check.passed ? "PASS " : "FAIL ") << check.name << " ("
           << check.detail << ")\n";
  }
  if (!opt.out.empty()) {
    WriteFile(PrepareOut(opt.out) / "verify_report.txt", report.str());
  }
  if (!opt.quiet || !ok) std::cout << report.str();
  return ok ? 0 : 1;
}

}  // namespace
}  // namespace cogniq

int main(int argc, char** argv) {
  using namespace cogniq;
  CLI::App app{"Two-user, two-channel Q-learning channel selection toolkit"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--config", opt.config, "JSON experiment config")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", opt.out, "Output directory");
    cmd->add_flag("--quiet", opt.quiet, "Suppress stdout summaries");
  };
  CLI::App* simulate =
      app.add_subcommand("simulate", "Run stochastic learning experiments");
  CLI::App* sweep =
      app.add_subcommand("sweep", "Delay CDFs over an alpha0 x gamma grid");
  CLI::App* ode = app.add_subcommand("ode", "Integrate the mean-field ODE");
  CLI::App* stationary =
      app.add_subcommand("stationary", "Solve for a stationary point");
  CLI::App* verify =
      app.add_subcommand("verify", "Run the Lyapunov invariant suite");
  for (CLI::App* cmd : {simulate, sweep, ode, stationary, verify}) {
    add_common(cmd);
  }
  verify->add_flag("--inject-fault", opt.inject_fault,
                   "Negate C12 in the analytic derivative (checker self-test)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) return Simulate(opt);
    if (*sweep) return RunSweep(opt);
    if (*ode) return RunOde(opt);
    if (*stationary) return RunStationary(opt);
    if (*verify) return RunVerify(opt);
  } catch (const ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
