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

#ifndef COGNIQ_CSV_H_
#define COGNIQ_CSV_H_

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "cogniq/dynamics.h"
#include "cogniq/harness.h"
#include "cogniq/ode.h"

namespace cogniq {

inline constexpr std::string_view kTrajectoryCsvHeader =
    "t,q_a1,q_a2,q_b1,q_b2,mu_a,mu_b,p_a1,p_b1,action_a,action_b,reward_a,"
    "reward_b,region";

inline constexpr std::string_view kDelayCdfCsvHeader = "delay,cdf";

// Shortest decimal form that parses back to the same double ("inf", "-inf"
// and "nan" for non-finite values).
std::string FormatDouble(double value);

// Rows are LF-terminated.
void WriteTrajectoryCsv(std::ostream& out,
                        std::span<const TrajectoryRecord> trajectory);

// Same schema as the trajectory CSV: t is ODE time, the probability columns
// are the unfloored Boltzmann probabilities at mf.gamma(), and the action
// and reward columns are empty.
void WriteOdeTraceCsv(std::ostream& out, const OdeTrace& trace,
                      const MeanField& mf);

// One row per distinct completed delay, followed by "# censored,<fraction>".
void WriteDelayCdfCsv(std::ostream& out, const DelayCdf& cdf);

std::string TrajectoryCsv(std::span<const TrajectoryRecord> trajectory);
std::string DelayCdfCsv(const DelayCdf& cdf);

}  // namespace cogniq

#endif  // COGNIQ_CSV_H_
