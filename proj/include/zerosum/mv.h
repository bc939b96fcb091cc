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

#ifndef ZEROSUM_MV_H_
#define ZEROSUM_MV_H_

#include <optional>
#include <vector>

#include "zerosum/game.h"
#include "zerosum/game_json.h"
#include "zerosum/rational.h"

// Strategic zero-sum detection in the sense of Moulin and Vial: a game is
// strategically zero-sum when positive weights lambda1, lambda2 and offsets
// a (per row) and b (per column) exist with
//
//   lambda1 * u1[i][j] + lambda2 * u2[i][j] = a[i] + b[j]   for every cell.
//
// Row offsets only depend on the row player's own action and column offsets
// on the column player's, so subtracting b from u1 and a from lambda2 * u2
// leaves best replies intact and yields a zero-sum game.

namespace zerosum {

struct MvDecomposition {
  Rational lambda1;
  Rational lambda2;
  std::vector<Rational> row_offsets;  // a, with a[0] = 0
  std::vector<Rational> col_offsets;  // b
};

// Fixes lambda1 = 1 and a[0] = 0. Separability of M = u1 + lambda2 u2 is
// equivalent to every double difference
//   M[i][j] - M[i][0] - M[0][j] + M[0][0]
// vanishing, which is linear in lambda2. If those constraints leave lambda2
// free the canonical lambda2 = 1 is reported.
std::optional<MvDecomposition> StrategicallyZeroSumDetect(const BimatrixGame& g);

// Re-checks the cell equations and positivity of both weights exactly.
bool VerifyDecomposition(const BimatrixGame& g, const MvDecomposition& d);

// The zero-sum game (u1 - b_j, -(u1 - b_j)) sharing best replies with g,
// scaled to lambda1 = 1.
BimatrixGame StrategicZeroSumGame(const BimatrixGame& g,
                                  const MvDecomposition& d);

Json ToJson(const MvDecomposition& d);

}  // namespace zerosum

#endif  // ZEROSUM_MV_H_
