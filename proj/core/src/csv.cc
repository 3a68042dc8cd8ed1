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

#include "cogniq/csv.h"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace cogniq {

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

void WriteTrajectoryCsv(std::ostream& out,
                        std::span<const TrajectoryRecord> trajectory) {
  out << kTrajectoryCsvHeader << '\n';
  for (const TrajectoryRecord& r : trajectory) {
    out << r.t;
    for (double v : r.q.values()) out << ',' << FormatDouble(v);
    out << ',' << FormatDouble(r.mu_a) << ',' << FormatDouble(r.mu_b) << ','
        << FormatDouble(r.p_a1) << ',' << FormatDouble(r.p_b1) << ','
        << ToString(r.actions.action_a) << ',' << ToString(r.actions.action_b)
        << ',' << FormatDouble(r.rewards.reward_a) << ','
        << FormatDouble(r.rewards.reward_b) << ',' << ToString(r.region)
        << '\n';
  }
}

void WriteOdeTraceCsv(std::ostream& out, const OdeTrace& trace,
                      const MeanField& mf) {
  const PolicyParams policy{.gamma = mf.gamma(), .explore_floor = 0.0};
  out << kTrajectoryCsvHeader << '\n';
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const QState& q = trace.states[k];
    out << FormatDouble(trace.times[k]);
    for (double v : q.values()) out << ',' << FormatDouble(v);
    out << ',' << FormatDouble(PreferenceRatio(q.user(UserId::kA))) << ','
        << FormatDouble(PreferenceRatio(q.user(UserId::kB))) << ','
        << FormatDouble(Channel1Probability(q.user(UserId::kA), policy)) << ','
        << FormatDouble(Channel1Probability(q.user(UserId::kB), policy))
        << ",,,,," << ToString(trace.regions[k]) << '\n';
  }
}

void WriteDelayCdfCsv(std::ostream& out, const DelayCdf& cdf) {
  out << kDelayCdfCsvHeader << '\n';
  for (std::size_t k = 0; k < cdf.delays().size(); ++k) {
    out << cdf.delays()[k] << ',' << FormatDouble(cdf.cdf()[k]) << '\n';
  }
  out << "# censored," << FormatDouble(cdf.censored_fraction()) << '\n';
}

std::string TrajectoryCsv(std::span<const TrajectoryRecord> trajectory) {
  std::ostringstream out;
  WriteTrajectoryCsv(out, trajectory);
  return out.str();
}

std::string DelayCdfCsv(const DelayCdf& cdf) {
  std::ostringstream out;
  WriteDelayCdfCsv(out, cdf);
  return out.str();
}

}  // namespace cogniq
