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

#include "zerosum/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <tuple>

#include "zerosum/adversarial.h"
#include "zerosum/mv.h"
#include "zerosum/solvers.h"

namespace zerosum {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ElapsedNs(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                              start)
      .count();
}

BenchRecord RunCell(Family family, int rows, int cols, std::uint64_t seed,
                    const BenchConfig& config) {
  BenchRecord rec;
  rec.family = family;
  rec.rows = rows;
  rec.cols = cols;
  rec.seed = seed;

  GenSpec spec;
  spec.family = family;
  spec.rows = rows;
  spec.cols = cols;
  spec.seed = seed;
  spec.value_bound = config.value_bound;
  const BimatrixGame g = Generate(spec);

  auto start = Clock::now();
  const DetectionResult detected = DetectAffine(g);
  rec.detect_ns = ElapsedNs(start);

  std::optional<BimatrixGame> zero_sum;
  std::optional<MinimaxSolution> solution;
  start = Clock::now();
  if (detected.adversarial()) {
    zero_sum = ToZeroSum(g, *detected.transform);
  } else if (auto mv = StrategicallyZeroSumDetect(g)) {
    zero_sum = StrategicZeroSumGame(g, *mv);
  }
  if (zero_sum) {
    solution = MinimaxSolve(*zero_sum);
    rec.lp_ns = ElapsedNs(start);
  }

  std::optional<EquilibriumSet> equilibria;
  if (rows <= config.enum_cap && cols <= config.enum_cap) {
    start = Clock::now();
    equilibria = SupportEnumeration(g, config.enum_cap);
    rec.enum_ns = ElapsedNs(start);
  }

  if (solution && equilibria) {
    bool agree = !equilibria->empty() &&
                 IsNashEquilibrium(g, solution->row_strategy,
                                   solution->col_strategy);
    for (const Equilibrium& e : *equilibria) {
      agree = agree && Bilinear(zero_sum->u1(), e.row, e.col) == solution->value;
    }
    rec.agree = agree;
  }
  return rec;
}

}  // namespace

std::vector<BenchRecord> RunBench(const BenchConfig& config) {
  struct Task {
    Family family;
    int rows, cols;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (Family f : config.families) {
    for (auto [r, c] : config.sizes) {
      for (std::uint64_t s : config.seeds) tasks.push_back({f, r, c, s});
    }
  }

  std::vector<BenchRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      const Task& t = tasks[k];
      records[k] = RunCell(t.family, t.rows, t.cols, t.seed, config);
    }
  };
  const int threads =
      config.threads > 0
          ? config.threads
          : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
  }

  std::stable_sort(records.begin(), records.end(),
                   [](const BenchRecord& a, const BenchRecord& b) {
                     return std::tie(a.family, a.rows, a.cols, a.seed) <
                            std::tie(b.family, b.rows, b.cols, b.seed);
                   });
  return records;
}

void WriteBenchCsv(const std::vector<BenchRecord>& records, std::ostream& out,
                   bool omit_timings) {
  auto timing = [omit_timings](std::optional<std::int64_t> ns) -> std::string {
    if (!ns) return "";
    return omit_timings ? "0" : std::to_string(*ns);
  };
  out << kBenchCsvHeader << "\n";
  for (const BenchRecord& r : records) {
    out << FamilyName(r.family) << ',' << r.rows << ',' << r.cols << ','
        << r.seed << ',' << timing(r.detect_ns) << ',' << timing(r.lp_ns)
        << ',' << timing(r.enum_ns) << ','
        << (r.agree ? (*r.agree ? "1" : "0") : "") << "\n";
  }
}

}  // namespace zerosum
