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

#include "zerosum/linear.h"

#include <utility>

#include "zerosum/error.h"

namespace zerosum {

std::optional<std::vector<Rational>> SolveSquareSystem(RationalMatrix a,
                                                       std::vector<Rational> b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) {
    throw Error(ErrorCode::kDimensionMismatch, "right-hand side length");
  }
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::kDimensionMismatch, "system is not square");
    }
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!a[r][col].IsZero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (int k = col; k < n; ++k) a[col][k] *= inv;
    b[col] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].IsZero()) continue;
      const Rational factor = a[r][col];
      for (int k = col; k < n; ++k) a[r][k] -= factor * a[col][k];
      b[r] -= factor * b[col];
    }
  }
  return b;
}

LpResult MaximizeWithBland(const RationalMatrix& a, const std::vector<Rational>& b,
                           const std::vector<Rational>& c) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m) {
    throw Error(ErrorCode::kDimensionMismatch, "b length differs from rows of A");
  }
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::kDimensionMismatch, "c length differs from columns of A");
    }
  }
  for (const Rational& bi : b) {
    if (bi.Sign() < 0) {
      throw Error(ErrorCode::kBadSpec, "origin must be feasible (b >= 0)");
    }
  }

  // Tableau over n structural then m slack columns.
  const int width = n + m;
  RationalMatrix tab(m, std::vector<Rational>(width));
  std::vector<Rational> rhs = b;
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) tab[i][j] = a[i][j];
    tab[i][n + i] = 1;
    basis[i] = n + i;
  }
  // reduced[j] = c_j - c_B B^-1 A_j
  std::vector<Rational> reduced(width);
  for (int j = 0; j < n; ++j) reduced[j] = c[j];
  Rational objective;

  LpResult result;
  while (true) {
    int enter = -1;
    for (int j = 0; j < width; ++j) {
      if (reduced[j].Sign() > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    Rational best_ratio;
    for (int i = 0; i < m; ++i) {
      if (tab[i][enter].Sign() <= 0) continue;
      Rational ratio = rhs[i] / tab[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leave < 0) {
      result.status = LpResult::Status::kUnbounded;
      return result;
    }

    const Rational inv = Rational(1) / tab[leave][enter];
    for (Rational& v : tab[leave]) v *= inv;
    rhs[leave] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter].IsZero()) continue;
      const Rational factor = tab[i][enter];
      for (int j = 0; j < width; ++j) {
        if (!tab[leave][j].IsZero()) tab[i][j] -= factor * tab[leave][j];
      }
      rhs[i] -= factor * rhs[leave];
    }
    if (!reduced[enter].IsZero()) {
      const Rational factor = reduced[enter];
      for (int j = 0; j < width; ++j) {
        if (!tab[leave][j].IsZero()) reduced[j] -= factor * tab[leave][j];
      }
      objective += factor * rhs[leave];
    }
    basis[leave] = enter;
    ++result.pivots;
  }

  result.objective = std::move(objective);
  result.primal.assign(n, Rational());
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) result.primal[basis[i]] = rhs[i];
  }
  result.dual.reserve(m);
  for (int i = 0; i < m; ++i) result.dual.push_back(-reduced[n + i]);
  return result;
}

}  // namespace zerosum
