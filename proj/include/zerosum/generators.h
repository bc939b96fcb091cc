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

#ifndef ZEROSUM_GENERATORS_H_
#define ZEROSUM_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string>

#include "zerosum/adversarial.h"
#include "zerosum/game.h"

namespace zerosum {

enum class Family {
  kDisguisedZeroSum,  // u2 = -alpha u1 + beta over an integer core u1
  kOrdinalNotAffine,  // u2 = -(u1^3): ordinally competitive, not affine
  kStrategicZeroSum,  // zero-sum core plus opponent-dependent offsets
  kUniform,           // independent integer entries
};

const char* FamilyName(Family f);
// Accepts the short names ("disguised", "ordinal", "strategic", "uniform")
// and the long CamelCase ones. Throws Error(kBadSpec).
Family ParseFamily(const std::string& text);

struct GenSpec {
  Family family = Family::kUniform;
  int rows = 2;
  int cols = 2;
  std::uint64_t seed = 0;
  // Integer entries are drawn from [-value_bound, value_bound].
  int value_bound = 20;
  // Planted disguise for kDisguisedZeroSum; drawn with denominators <= 8
  // (alpha in [1/2, 8], beta in [-10, 10]) when absent.
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
};

// Throws Error(kBadSpec) for invalid dimensions or bounds, or when the
// family's defining property cannot be met (e.g. fewer than three cells for
// kOrdinalNotAffine). Every returned game is re-checked against its family.
BimatrixGame Generate(const GenSpec& spec);

// (core, -alpha core + beta).
BimatrixGame Disguise(const PayoffMatrix& core, const AffineTransform& t);
// (u1, -(u1^3)) entrywise.
BimatrixGame CubeTransform(const PayoffMatrix& u1);

// Transform planted by Generate for a kDisguisedZeroSum spec.
AffineTransform PlantedTransform(const GenSpec& spec);

}  // namespace zerosum

#endif  // ZEROSUM_GENERATORS_H_
