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

#include "zerosum/mv.h"

#include <utility>

namespace zerosum {

namespace {

Rational DoubleDifference(const PayoffMatrix& m, int i, int j) {
  return m(i, j) - m(i, 0) - m(0, j) + m(0, 0);
}

}  // namespace

std::optional<MvDecomposition> StrategicallyZeroSumDetect(
    const BimatrixGame& g) {
  const PayoffMatrix& u1 = g.u1();
  const PayoffMatrix& u2 = g.u2();

  // Constraints d1 + lambda2 * d2 = 0 over all interior cells.
  std::optional<Rational> lambda2;
  for (int i = 1; i < g.rows() && !lambda2; ++i) {
    for (int j = 1; j < g.cols(); ++j) {
      const Rational d2 = DoubleDifference(u2, i, j);
      if (!d2.IsZero()) {
        lambda2 = -DoubleDifference(u1, i, j) / d2;
        break;
      }
    }
  }
  if (!lambda2) lambda2 = Rational(1);
  if (lambda2->Sign() <= 0) return std::nullopt;
  for (int i = 1; i < g.rows(); ++i) {
    for (int j = 1; j < g.cols(); ++j) {
      if (!(DoubleDifference(u1, i, j) + *lambda2 * DoubleDifference(u2, i, j))
               .IsZero()) {
        return std::nullopt;
      }
    }
  }

  auto combined = [&](int i, int j) { return u1(i, j) + *lambda2 * u2(i, j); };
  MvDecomposition d{Rational(1), *lambda2, {}, {}};
  for (int i = 0; i < g.rows(); ++i) {
    d.row_offsets.push_back(combined(i, 0) - combined(0, 0));
  }
  for (int j = 0; j < g.cols(); ++j) d.col_offsets.push_back(combined(0, j));
  return d;
}

bool VerifyDecomposition(const BimatrixGame& g, const MvDecomposition& d) {
  if (d.lambda1.Sign() <= 0 || d.lambda2.Sign() <= 0) return false;
  if (static_cast<int>(d.row_offsets.size()) != g.rows() ||
      static_cast<int>(d.col_offsets.size()) != g.cols()) {
    return false;
  }
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) {
      if (d.lambda1 * g.u1()(i, j) + d.lambda2 * g.u2()(i, j) !=
          d.row_offsets[i] + d.col_offsets[j]) {
        return false;
      }
    }
  }
  return true;
}

BimatrixGame StrategicZeroSumGame(const BimatrixGame& g,
                                  const MvDecomposition& d) {
  std::vector<Rational> v1, v2;
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) {
      Rational v = g.u1()(i, j) - d.col_offsets[j] / d.lambda1;
      v2.push_back(-v);
      v1.push_back(std::move(v));
    }
  }
  return BimatrixGame(PayoffMatrix(g.rows(), g.cols(), std::move(v1)),
                      PayoffMatrix(g.rows(), g.cols(), std::move(v2)));
}

Json ToJson(const MvDecomposition& d) {
  Json j;
  j["status"] = "strategically_zero_sum";
  j["lambda1"] = ToJson(d.lambda1);
  j["lambda2"] = ToJson(d.lambda2);
  Json a = Json::array(), b = Json::array();
  for (const Rational& r : d.row_offsets) a.push_back(ToJson(r));
  for (const Rational& r : d.col_offsets) b.push_back(ToJson(r));
  j["row_offsets"] = std::move(a);
  j["col_offsets"] = std::move(b);
  return j;
}

}  // namespace zerosum
