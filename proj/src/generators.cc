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

#include "zerosum/generators.h"

#include <set>
#include <string>
#include <vector>

#include "zerosum/error.h"
#include "zerosum/mv.h"
#include "zerosum/sampling.h"

namespace zerosum {

namespace {

constexpr int kMaxDisguiseDenominator = 8;
constexpr int kMaxAttempts = 1000;

// Stream tags keep the matrix draw independent of the disguise draw.
enum Stream : std::uint64_t { kMatrixStream = 1, kDisguiseStream = 2 };

PayoffMatrix RandomIntegerMatrix(Rng& rng, int rows, int cols, int bound) {
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(rows) * cols);
  for (int k = 0; k < rows * cols; ++k) {
    entries.emplace_back(UniformInt(rng, -bound, bound));
  }
  return PayoffMatrix(rows, cols, std::move(entries));
}

int DistinctValues(const PayoffMatrix& m) {
  std::set<Rational> values(m.entries().begin(), m.entries().end());
  return static_cast<int>(values.size());
}

Rational RandomRational(Rng& rng, std::int64_t lo_num_per_den,
                        std::int64_t hi_num_per_den, bool half_floor) {
  const std::int64_t den = UniformInt(rng, 1, kMaxDisguiseDenominator);
  const std::int64_t lo = half_floor ? (den + 1) / 2 : lo_num_per_den * den;
  return Rational(UniformInt(rng, lo, hi_num_per_den * den), den);
}

[[noreturn]] void BadSpec(const std::string& what) {
  throw Error(ErrorCode::kBadSpec, what);
}

}  // namespace

const char* FamilyName(Family f) {
  switch (f) {
    case Family::kDisguisedZeroSum: return "disguised";
    case Family::kOrdinalNotAffine: return "ordinal";
    case Family::kStrategicZeroSum: return "strategic";
    case Family::kUniform: return "uniform";
  }
  return "unknown";
}

Family ParseFamily(const std::string& text) {
  if (text == "disguised" || text == "DisguisedZeroSum") {
    return Family::kDisguisedZeroSum;
  }
  if (text == "ordinal" || text == "OrdinalNotAffine") {
    return Family::kOrdinalNotAffine;
  }
  if (text == "strategic" || text == "StrategicZeroSum") {
    return Family::kStrategicZeroSum;
  }
  if (text == "uniform" || text == "Uniform") return Family::kUniform;
  BadSpec("unknown family '" + text + "'");
}

BimatrixGame Disguise(const PayoffMatrix& core, const AffineTransform& t) {
  std::vector<Rational> u2;
  u2.reserve(core.size());
  for (const Rational& e : core.entries()) u2.push_back(t.Apply(e));
  return BimatrixGame(core, PayoffMatrix(core.rows(), core.cols(), std::move(u2)));
}

BimatrixGame CubeTransform(const PayoffMatrix& u1) {
  std::vector<Rational> u2;
  u2.reserve(u1.size());
  for (const Rational& e : u1.entries()) u2.push_back(-(e * e * e));
  return BimatrixGame(u1, PayoffMatrix(u1.rows(), u1.cols(), std::move(u2)));
}

AffineTransform PlantedTransform(const GenSpec& spec) {
  Rng rng = MakeRng(spec.seed, {kDisguiseStream});
  Rational alpha = RandomRational(rng, 0, 8, /*half_floor=*/true);
  Rational beta = RandomRational(rng, -10, 10, /*half_floor=*/false);
  return AffineTransform(spec.alpha.value_or(alpha), spec.beta.value_or(beta));
}

BimatrixGame Generate(const GenSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1) BadSpec("dimensions must be >= 1");
  if (spec.value_bound < 1) BadSpec("value bound must be >= 1");
  Rng rng = MakeRng(spec.seed, {kMatrixStream});
  const int cells = spec.rows * spec.cols;

  switch (spec.family) {
    case Family::kDisguisedZeroSum: {
      const AffineTransform t = PlantedTransform(spec);
      PayoffMatrix core = RandomIntegerMatrix(rng, spec.rows, spec.cols,
                                              spec.value_bound);
      // A constant core has no unique disguise to recover.
      for (int attempt = 0; cells > 1 && core.IsConstant(); ++attempt) {
        if (attempt == kMaxAttempts) BadSpec("could not draw a non-constant core");
        core = RandomIntegerMatrix(rng, spec.rows, spec.cols, spec.value_bound);
      }
      BimatrixGame g = Disguise(core, t);
      const DetectionResult detected = DetectAffine(g);
      if (!detected.adversarial() ||
          (cells > 1 && detected.transform != t)) {
        BadSpec("disguised game failed detection");
      }
      return g;
    }
    case Family::kOrdinalNotAffine: {
      if (cells < 3) BadSpec("ordinal family needs at least three cells");
      // -(x^3) is affine on three points exactly when they sum to zero, so
      // draws are re-checked and retried.
      for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        PayoffMatrix u1 = RandomIntegerMatrix(rng, spec.rows, spec.cols,
                                              spec.value_bound);
        if (DistinctValues(u1) < 3) continue;
        BimatrixGame g = CubeTransform(u1);
        if (IsPureOrdinalCompetitive(g) && !IsAdversarial(g)) return g;
      }
      BadSpec("could not draw a non-affine ordinal game within the bound");
    }
    case Family::kStrategicZeroSum: {
      const PayoffMatrix core = RandomIntegerMatrix(rng, spec.rows, spec.cols,
                                                    spec.value_bound);
      std::vector<std::int64_t> row_offset(spec.rows), col_offset(spec.cols);
      for (auto& d : row_offset) d = UniformInt(rng, -spec.value_bound, spec.value_bound);
      for (auto& c : col_offset) c = UniformInt(rng, -spec.value_bound, spec.value_bound);
      const Rational scale = RandomRational(rng, 0, 4, /*half_floor=*/true);
      std::vector<Rational> u1, u2;
      for (int i = 0; i < spec.rows; ++i) {
        for (int j = 0; j < spec.cols; ++j) {
          u1.push_back(core(i, j) + Rational(col_offset[j]));
          u2.push_back(scale * (Rational(row_offset[i]) - core(i, j)));
        }
      }
      BimatrixGame g(PayoffMatrix(spec.rows, spec.cols, std::move(u1)),
                     PayoffMatrix(spec.rows, spec.cols, std::move(u2)));
      if (!StrategicallyZeroSumDetect(g)) {
        BadSpec("strategic zero-sum game failed detection");
      }
      return g;
    }
    case Family::kUniform:
      return BimatrixGame(
          RandomIntegerMatrix(rng, spec.rows, spec.cols, spec.value_bound),
          RandomIntegerMatrix(rng, spec.rows, spec.cols, spec.value_bound));
  }
  BadSpec("unknown family");
}

}  // namespace zerosum
