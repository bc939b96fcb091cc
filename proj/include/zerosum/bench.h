// Copyright 2026 The zerosum Authors
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

#ifndef ZEROSUM_BENCH_H_
#define ZEROSUM_BENCH_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zerosum/generators.h"

namespace zerosum {

struct BenchConfig {
  std::vector<Family> families;
  // (rows, cols) pairs.
  std::vector<std::pair<int, int>> sizes;
  std::vector<std::uint64_t> seeds;
  // Support enumeration runs only when both dimensions are within this cap.
  int enum_cap = 5;
  int value_bound = 20;
  // 0 picks the hardware concurrency.
  int threads = 0;
};

struct BenchRecord {
  Family family = Family::kUniform;
  int rows = 0;
  int cols = 0;
  std::uint64_t seed = 0;
  std::int64_t detect_ns = 0;
  // Unset when the path was skipped: no zero-sum route for the LP, or the
  // game exceeds the enumeration cap.
  std::optional<std::int64_t> lp_ns;
  std::optional<std::int64_t> enum_ns;
  // Set only when both paths ran.
  std::optional<bool> agree;
};

// One record per (family, size, seed) cell, sorted in that order regardless
// of how the cells were scheduled.
//
// The LP path routes through the affine normalization when the game is
// adversarial and through the strategic zero-sum reduction otherwise, if one
// exists. Agreement means enumeration found at least one equilibrium, every
// enumerated equilibrium pays exactly the LP value in the zero-sum game, and
// the LP strategies are themselves an equilibrium of the original game.
std::vector<BenchRecord> RunBench(const BenchConfig& config);

inline constexpr const char* kBenchCsvHeader =
    "family,rows,cols,seed,detect_ns,lp_ns,enum_ns,agree";

// Skipped timings and unset agreement are written as empty fields. With
// `omit_timings` every timing is written as 0 so the file is byte-stable.
void WriteBenchCsv(const std::vector<BenchRecord>& records, std::ostream& out,
                   bool omit_timings = false);

}  // namespace zerosum

#endif  // ZEROSUM_BENCH_H_
