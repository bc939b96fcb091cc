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

#include "zerosum/cli.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "zerosum/adversarial.h"
#include "zerosum/axioms.h"
#include "zerosum/bench.h"
#include "zerosum/error.h"
#include "zerosum/game_json.h"
#include "zerosum/generators.h"
#include "zerosum/mv.h"
#include "zerosum/solvers.h"

namespace zerosum {

namespace {

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::int64_t ParseInt(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorCode::kParseError, "expected an integer, got '" + text + "'");
  }
  return v;
}

// "3" is 3x3, "3x4" is 3 rows by 4 columns.
std::vector<std::pair<int, int>> ParseSizes(const std::string& text) {
  std::vector<std::pair<int, int>> sizes;
  for (const std::string& item : SplitList(text)) {
    const auto x = item.find('x');
    const int rows = static_cast<int>(ParseInt(item.substr(0, x)));
    const int cols = x == std::string::npos
                         ? rows
                         : static_cast<int>(ParseInt(item.substr(x + 1)));
    if (rows < 1 || cols < 1) {
      throw Error(ErrorCode::kParseError, "bad size '" + item + "'");
    }
    sizes.emplace_back(rows, cols);
  }
  return sizes;
}

// Comma-separated seeds or inclusive ranges, e.g. "0-9,42".
std::vector<std::uint64_t> ParseSeeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  for (const std::string& item : SplitList(text)) {
    const auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      seeds.push_back(static_cast<std::uint64_t>(ParseInt(item)));
      continue;
    }
    const std::int64_t lo = ParseInt(item.substr(0, dash));
    const std::int64_t hi = ParseInt(item.substr(dash + 1));
    if (lo < 0 || hi < lo) {
      throw Error(ErrorCode::kParseError, "bad seed range '" + item + "'");
    }
    for (std::int64_t s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  return seeds;
}

void Emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int Check(const std::string& path, std::ostream& out) {
  const DetectionResult r = DetectAffine(ReadGameFile(path));
  Emit(out, ToJson(r));
  return r.adversarial() ? kExitOk : kExitNegative;
}

int Normalize(const std::string& path, const std::string& out_path,
              std::ostream& out) {
  const BimatrixGame g = ReadGameFile(path);
  const DetectionResult r = DetectAffine(g);
  if (!r.adversarial()) {
    Emit(out, ToJson(r));
    return kExitNegative;
  }
  const BimatrixGame z = ToZeroSum(g, *r.transform);
  if (out_path.empty()) {
    Emit(out, ToJson(z));
  } else {
    WriteGameFile(out_path, z);
  }
  return kExitOk;
}

int Solve(const std::string& path, std::ostream& out) {
  const BimatrixGame g = ReadGameFile(path);
  const DetectionResult r = DetectAffine(g);
  if (!r.adversarial()) {
    Emit(out, Json{{"detection", ToJson(r)}});
    return kExitNegative;
  }
  const AffineTransform& t = *r.transform;
  const MinimaxSolution s = MinimaxSolve(ToZeroSum(g, t));
  Json j;
  j["detection"] = ToJson(r);
  j["value"] = ToJson(s.value);
  // v1 = alpha u1 - beta, so the same profile pays (v1 + beta) / alpha in u1.
  j["u1_value"] = ToJson((s.value + t.beta()) / t.alpha());
  j["row_strategy"] = ToJson(s.row_strategy);
  j["col_strategy"] = ToJson(s.col_strategy);
  Emit(out, j);
  return kExitOk;
}

int AuditAxioms(const std::string& path, const std::string& lens, int samples,
                std::uint64_t seed, std::ostream& out) {
  const AxiomReport report =
      AuditMixtureAxioms(ReadGameFile(path), ParseLens(lens), samples, seed);
  Emit(out, ToJson(report));
  return report.passed() ? kExitOk : kExitNegative;
}

int MvCheck(const std::string& path, std::ostream& out) {
  const BimatrixGame g = ReadGameFile(path);
  const auto d = StrategicallyZeroSumDetect(g);
  if (!d) {
    Emit(out, Json{{"status", "none_found"}});
    return kExitNegative;
  }
  Emit(out, ToJson(*d));
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Strictly competitive game detection, normalization and "
               "exact zero-sum solving."};
  app.require_subcommand(1);
  app.name(args.empty() ? "zerosum" : args.front());

  std::string file, out_path, lens = "neg-u1", family = "uniform";
  std::string families = "disguised,strategic", sizes = "2,3,4,5,10,20,50";
  std::string seeds = "0-4", alpha, beta;
  int samples = 200, rows = 2, cols = 2, bound = 20, enum_cap = 5, threads = 0;
  std::uint64_t seed = 0;
  bool omit_timings = false;

  auto* check = app.add_subcommand("check", "Detect adversariality");
  check->add_option("file", file, "Game JSON file")->required();

  auto* normalize = app.add_subcommand("normalize", "Write the zero-sum form");
  normalize->add_option("file", file, "Game JSON file")->required();
  normalize->add_option("--out", out_path, "Output file (default: stdout)");

  auto* solve = app.add_subcommand("solve", "Detect, normalize and solve");
  solve->add_option("file", file, "Game JSON file")->required();

  auto* audit = app.add_subcommand("audit-axioms", "Audit mixture axioms");
  audit->add_option("file", file, "Game JSON file")->required();
  audit->add_option("--lens", lens, "neg-u1 or u2");
  audit->add_option("--samples", samples, "Samples per axiom")
      ->check(CLI::PositiveNumber);
  audit->add_option("--seed", seed, "Random seed");

  auto* mv = app.add_subcommand("mv-check", "Strategic zero-sum detection");
  mv->add_option("file", file, "Game JSON file")->required();

  auto* gen = app.add_subcommand("gen", "Generate a game");
  gen->add_option("--family", family,
                  "disguised, ordinal, strategic or uniform");
  gen->add_option("--rows", rows)->check(CLI::PositiveNumber);
  gen->add_option("--cols", cols)->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed);
  gen->add_option("--bound", bound, "Entries drawn from [-bound, bound]")
      ->check(CLI::PositiveNumber);
  gen->add_option("--alpha", alpha, "Planted alpha as n/d (disguised)");
  gen->add_option("--beta", beta, "Planted beta as n/d (disguised)");
  gen->add_option("--out", out_path, "Output file (default: stdout)");

  auto* bench = app.add_subcommand("bench", "Detection vs enumeration timings");
  bench->add_option("--families", families, "Comma-separated families");
  bench->add_option("--sizes", sizes, "Comma-separated N or RxC");
  bench->add_option("--seeds", seeds, "Comma-separated seeds or ranges a-b");
  bench->add_option("--out", out_path, "CSV output file")->required();
  bench->add_option("--enum-cap", enum_cap, "Largest enumerated dimension");
  bench->add_option("--bound", bound)->check(CLI::PositiveNumber);
  bench->add_option("--threads", threads, "Worker threads (0 = all cores)");
  bench->add_flag("--omit-timings", omit_timings,
                  "Write zero timings for byte-stable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (*check) return Check(file, out);
    if (*normalize) return Normalize(file, out_path, out);
    if (*solve) return Solve(file, out);
    if (*audit) return AuditAxioms(file, lens, samples, seed, out);
    if (*mv) return MvCheck(file, out);
    if (*gen) {
      GenSpec spec;
      spec.family = ParseFamily(family);
      spec.rows = rows;
      spec.cols = cols;
      spec.seed = seed;
      spec.value_bound = bound;
      if (!alpha.empty()) spec.alpha = Rational::Parse(alpha, true);
      if (!beta.empty()) spec.beta = Rational::Parse(beta, true);
      const BimatrixGame g = Generate(spec);
      if (out_path.empty()) {
        Emit(out, ToJson(g));
      } else {
        WriteGameFile(out_path, g);
      }
      return kExitOk;
    }
    if (*bench) {
      BenchConfig config;
      for (const std::string& f : SplitList(families)) {
        config.families.push_back(ParseFamily(f));
      }
      config.sizes = ParseSizes(sizes);
      config.seeds = ParseSeeds(seeds);
      config.enum_cap = enum_cap;
      config.value_bound = bound;
      config.threads = threads;
      const std::vector<BenchRecord> records = RunBench(config);
      std::ofstream csv(out_path);
      if (!csv) throw Error(ErrorCode::kParseError, "cannot write '" + out_path + "'");
      WriteBenchCsv(records, csv, omit_timings);
      const auto both = std::count_if(records.begin(), records.end(),
                                      [](const BenchRecord& r) { return r.agree.has_value(); });
      const auto agreeing = std::count_if(
          records.begin(), records.end(),
          [](const BenchRecord& r) { return r.agree.value_or(false); });
      Emit(out, Json{{"records", records.size()},
                     {"compared", both},
                     {"agreeing", agreeing},
                     {"csv", out_path}});
      return agreeing == both ? kExitOk : kExitNegative;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace zerosum
