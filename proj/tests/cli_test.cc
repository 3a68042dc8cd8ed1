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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("cogniq_cli_") + info->name() + "_" +
            std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path WriteConfig(const std::string& json,
                       const std::string& name = "cfg.json") {
    const fs::path p = dir_ / name;
    std::ofstream(p) << json;
    return p;
  }

  // Runs the CLI and returns its exit status.
  int Run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " \"" COGNIQ_CLI_PATH "\" " + args +
                            " >\"" + (dir_ / "stdout.txt").string() +
                            "\" 2>\"" + (dir_ / "stderr.txt").string() + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static std::string Slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

constexpr char kSmall[] =
    R"({"horizon": 300, "num_runs": 40, "master_seed": 7,
        "export_trajectories": 2, "sweep_alpha0": [0.5, 1.0],
        "sweep_gamma": [0.1], "verify_samples": 20})";

TEST_F(CliTest, SimulateWritesOutputs) {
  const fs::path cfg = WriteConfig(kSmall);
  ASSERT_EQ(Run("simulate --quiet --config " + cfg.string() + " --out " +
                (dir_ / "out").string()),
            0);
  EXPECT_TRUE(fs::exists(dir_ / "out" / "trajectory_run0.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "out" / "trajectory_run1.csv"));
  EXPECT_FALSE(fs::exists(dir_ / "out" / "trajectory_run2.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "out" / "summary.json"));
  const std::string cdf = Slurp(dir_ / "out" / "delay_cdf.csv");
  EXPECT_EQ(cdf.rfind("delay,cdf\n", 0), 0u);
  EXPECT_NE(cdf.find("# censored,"), std::string::npos);
}

TEST_F(CliTest, OutputsAreDeterministicAcrossThreadCounts) {
  const fs::path cfg = WriteConfig(kSmall);
  ASSERT_EQ(Run("sweep --quiet --config " + cfg.string() + " --out " +
                    (dir_ / "a").string(),
                "COGNIQ_THREADS=1"),
            0);
  ASSERT_EQ(Run("sweep --quiet --config " + cfg.string() + " --out " +
                    (dir_ / "b").string(),
                "COGNIQ_THREADS=4"),
            0);
  for (const char* f :
       {"delay_cdf_cell0.csv", "delay_cdf_cell1.csv", "sweep_summary.csv"}) {
    EXPECT_EQ(Slurp(dir_ / "a" / f), Slurp(dir_ / "b" / f)) << f;
    EXPECT_FALSE(Slurp(dir_ / "a" / f).empty()) << f;
  }
}

TEST_F(CliTest, OdeAndStationary) {
  const fs::path cfg = WriteConfig(kSmall);
  ASSERT_EQ(Run("ode --quiet --config " + cfg.string() + " --out " +
                (dir_ / "o").string()),
            0);
  EXPECT_EQ(Slurp(dir_ / "o" / "ode_trace.csv").rfind("t,q_a1", 0), 0u);
  ASSERT_EQ(Run("stationary --quiet --config " + cfg.string() + " --out " +
                (dir_ / "o").string()),
            0);
  EXPECT_TRUE(fs::exists(dir_ / "o" / "stationary.csv"));
}

TEST_F(CliTest, VerifyPassesAndDetectsFault) {
  const fs::path cfg = WriteConfig(kSmall);
  EXPECT_EQ(Run("verify --config " + cfg.string()), 0);
  EXPECT_NE(Slurp(dir_ / "stdout.txt").find("PASS"), std::string::npos);
  EXPECT_EQ(Run("verify --inject-fault --config " + cfg.string()), 1);
  EXPECT_NE(Slurp(dir_ / "stdout.txt").find("FAIL"), std::string::npos);
}

TEST_F(CliTest, RejectsZeroTemperature) {
  const fs::path cfg = WriteConfig(R"({"gamma": 0})");
  EXPECT_EQ(Run("simulate --config " + cfg.string() + " --out " +
                (dir_ / "out").string()),
            2);
  EXPECT_NE(Slurp(dir_ / "stderr.txt").find("gamma"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "out" / "summary.json"));
}

TEST_F(CliTest, RejectsUnknownKey) {
  const fs::path cfg = WriteConfig(R"({"horizn": 10})");
  EXPECT_EQ(Run("simulate --config " + cfg.string()), 2);
  EXPECT_NE(Slurp(dir_ / "stderr.txt").find("horizn"), std::string::npos);
}

TEST_F(CliTest, UnwritableOutputDirectory) {
  const fs::path cfg = WriteConfig(kSmall);
  // A regular file where the output directory should go.
  std::ofstream(dir_ / "blocker") << "x";
  EXPECT_EQ(Run("simulate --quiet --config " + cfg.string() + " --out " +
                (dir_ / "blocker" / "sub").string()),
            1);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_NE(Run("simulate"), 0);
  EXPECT_NE(Run("simulate --config " + (dir_ / "missing.json").string()), 0);
  EXPECT_NE(Run(""), 0);
  const fs::path cfg = WriteConfig(kSmall);
  EXPECT_EQ(Run("simulate --quiet --config " + cfg.string() + " --out " +
                    (dir_ / "out").string(),
                "COGNIQ_THREADS=abc"),
            1);
}

}  // namespace
