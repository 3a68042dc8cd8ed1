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

#ifndef COGNIQ_RANDOM_H_
#define COGNIQ_RANDOM_H_

#include <cstdint>
#include <random>

namespace cogniq {

// Single-consumer uniform source. Backed by std::mt19937_64, whose output
// sequence is fixed by the standard, with the [0,1) mapping done here so
// draws are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// Seed of the independent stream for (master_seed, grid_index, run_index).
// Depends only on its arguments, so runs can execute in any order.
std::uint64_t SubstreamSeed(std::uint64_t master_seed,
                            std::uint64_t grid_index,
                            std::uint64_t run_index);

}  // namespace cogniq

#endif  // COGNIQ_RANDOM_H_
