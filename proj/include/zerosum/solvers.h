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

#ifndef ZEROSUM_SOLVERS_H_
#define ZEROSUM_SOLVERS_H_

#include <vector>

#include "zerosum/adversarial.h"
#include "zerosum/game.h"
#include "zerosum/game_json.h"
#include "zerosum/rational.h"

namespace zerosum {

inline constexpr int kDefaultEnumerationDim = 5;

// Value and one optimal strategy per player of a zero-sum game, in the row
// player's (u1) scale.
struct MinimaxSolution {
  Rational value;
  MixedStrategy row_strategy;
  MixedStrategy col_strategy;
  int pivots = 0;
};

// Exact minimax by linear programming. The payoff matrix is shifted to be
// strictly positive, the column player's normalized LP
//   max 1'y  s.t.  A y <= 1, y >= 0
// is solved with Bland's rule, and the row strategy is read off the duals.
// Throws Error(kNotZeroSum) unless u1 + u2 = 0 entrywise.
MinimaxSolution MinimaxSolve(const BimatrixGame& z);

// Checks that the row strategy secures at least `value` against every pure
// column and the column strategy concedes at most `value` to every pure row.
bool CertifiesValue(const PayoffMatrix& v1, const MinimaxSolution& s);

struct Equilibrium {
  MixedStrategy row;
  MixedStrategy col;
  Rational u1_payoff;
  Rational u2_payoff;

  friend bool operator==(const Equilibrium&, const Equilibrium&) = default;
};

// Sorted by (row, col), no duplicates.
using EquilibriumSet = std::vector<Equilibrium>;

// Enumerates equal-size support pairs, solves both indifference systems
// exactly and keeps nonnegative profiles that pass the best-response checks.
// Singular systems are skipped, so completeness holds only for nondegenerate
// games.
// Throws Error(kTooLarge) if either dimension exceeds max_dim.
EquilibriumSet SupportEnumeration(const BimatrixGame& g,
                                  int max_dim = kDefaultEnumerationDim);

// True iff each listed profile is a best response for both players.
bool IsNashEquilibrium(const BimatrixGame& g, const MixedStrategy& row,
                       const MixedStrategy& col);

// Enumerates g and ToZeroSum(g, t); true iff the normalized game is zero-sum,
// the equilibrium strategy sets coincide and each original u1 payoff equals
// (v1 payoff + beta) / alpha.
bool EquilibriumInvarianceCheck(const BimatrixGame& g, const AffineTransform& t,
                                int max_dim = kDefaultEnumerationDim);

Json ToJson(const MinimaxSolution& s);
Json ToJson(const EquilibriumSet& set);

}  // namespace zerosum

#endif  // ZEROSUM_SOLVERS_H_
