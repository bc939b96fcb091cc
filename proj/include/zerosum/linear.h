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

#ifndef ZEROSUM_LINEAR_H_
#define ZEROSUM_LINEAR_H_

#include <optional>
#include <vector>

#include "zerosum/rational.h"

namespace zerosum {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Solves the square system a x = b by Gauss-Jordan elimination. Returns
// nullopt when a is singular.
std::optional<std::vector<Rational>> SolveSquareSystem(RationalMatrix a,
                                                       std::vector<Rational> b);

// maximize c'x  subject to  A x <= b,  x >= 0,  with b >= 0.
//
// The slack basis is feasible at the origin, so a single primal phase
// suffices. Entering and leaving variables follow Bland's smallest-index rule,
// which rules out cycling on degenerate pivots.
struct LpResult {
  enum class Status { kOptimal, kUnbounded };
  Status status = Status::kOptimal;
  Rational objective;
  std::vector<Rational> primal;  // length = columns of A
  std::vector<Rational> dual;    // length = rows of A; A'dual >= c at optimum
  int pivots = 0;
};

// Throws Error(kDimensionMismatch) on inconsistent shapes and Error(kBadSpec)
// if some b_i < 0.
LpResult MaximizeWithBland(const RationalMatrix& a, const std::vector<Rational>& b,
                           const std::vector<Rational>& c);

}  // namespace zerosum

#endif  // ZEROSUM_LINEAR_H_
