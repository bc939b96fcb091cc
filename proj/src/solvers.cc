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

#include "zerosum/solvers.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "zerosum/error.h"
#include "zerosum/linear.h"

namespace zerosum {

MinimaxSolution MinimaxSolve(const BimatrixGame& z) {
  if (!IsZeroSum(z)) {
    throw Error(ErrorCode::kNotZeroSum, "u1 + u2 is not identically zero");
  }
  const PayoffMatrix& v = z.u1();
  const Rational min_entry =
      *std::min_element(v.entries().begin(), v.entries().end());
  const Rational shift =
      min_entry.Sign() <= 0 ? Rational(1) - min_entry : Rational(0);

  RationalMatrix a(v.rows(), std::vector<Rational>(v.cols()));
  for (int r = 0; r < v.rows(); ++r) {
    for (int c = 0; c < v.cols(); ++c) a[r][c] = v(r, c) + shift;
  }
  const LpResult lp = MaximizeWithBland(a, std::vector<Rational>(v.rows(), 1),
                                        std::vector<Rational>(v.cols(), 1));
  // A > 0 bounds every column variable, so the LP is never unbounded and the
  // optimum is strictly positive.
  if (lp.status != LpResult::Status::kOptimal || lp.objective.Sign() <= 0) {
    throw std::logic_error("minimax LP did not reach a positive optimum");
  }

  std::vector<Rational> x, y;
  for (const Rational& d : lp.dual) x.push_back(d / lp.objective);
  for (const Rational& p : lp.primal) y.push_back(p / lp.objective);
  MinimaxSolution s{Rational(1) / lp.objective - shift,
                    MixedStrategy(std::move(x)), MixedStrategy(std::move(y)),
                    lp.pivots};
  if (!CertifiesValue(v, s)) {
    throw std::logic_error("minimax LP produced uncertified strategies");
  }
  return s;
}

bool CertifiesValue(const PayoffMatrix& v1, const MinimaxSolution& s) {
  if (s.row_strategy.size() != v1.rows() || s.col_strategy.size() != v1.cols()) {
    return false;
  }
  for (int c = 0; c < v1.cols(); ++c) {
    if (Bilinear(v1, s.row_strategy, MixedStrategy::Pure(v1.cols(), c)) <
        s.value) {
      return false;
    }
  }
  for (int r = 0; r < v1.rows(); ++r) {
    if (Bilinear(v1, MixedStrategy::Pure(v1.rows(), r), s.col_strategy) >
        s.value) {
      return false;
    }
  }
  return true;
}

namespace {

// All size-k subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> Subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int i = start; i < n; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

// Strategy of the player owning `own` that makes the opponent indifferent
// across `other` under `payoff` (the opponent's payoff). `row_owner` says
// whether `own` indexes rows of `payoff`. Returns nullopt for singular or
// negative solutions.
std::optional<MixedStrategy> Indifference(const PayoffMatrix& payoff,
                                          const std::vector<int>& own,
                                          const std::vector<int>& other,
                                          bool row_owner, int num_actions) {
  const int k = static_cast<int>(own.size());
  RationalMatrix a(k + 1, std::vector<Rational>(k + 1));
  std::vector<Rational> b(k + 1);
  for (int e = 0; e < k; ++e) {
    for (int s = 0; s < k; ++s) {
      a[e][s] = row_owner ? payoff(own[s], other[e]) : payoff(other[e], own[s]);
    }
    a[e][k] = -1;
  }
  for (int s = 0; s < k; ++s) a[k][s] = 1;
  b[k] = 1;
  auto solution = SolveSquareSystem(std::move(a), std::move(b));
  if (!solution) return std::nullopt;
  std::vector<Rational> probs(num_actions);
  for (int s = 0; s < k; ++s) {
    if ((*solution)[s].Sign() < 0) return std::nullopt;
    probs[own[s]] = (*solution)[s];
  }
  return MixedStrategy(std::move(probs));
}

}  // namespace

bool IsNashEquilibrium(const BimatrixGame& g, const MixedStrategy& row,
                       const MixedStrategy& col) {
  const Rational v1 = Bilinear(g.u1(), row, col);
  const Rational v2 = Bilinear(g.u2(), row, col);
  for (int r = 0; r < g.rows(); ++r) {
    if (Bilinear(g.u1(), MixedStrategy::Pure(g.rows(), r), col) > v1) {
      return false;
    }
  }
  for (int c = 0; c < g.cols(); ++c) {
    if (Bilinear(g.u2(), row, MixedStrategy::Pure(g.cols(), c)) > v2) {
      return false;
    }
  }
  return true;
}

EquilibriumSet SupportEnumeration(const BimatrixGame& g, int max_dim) {
  if (g.rows() > max_dim || g.cols() > max_dim) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                    " exceeds enumeration limit " + std::to_string(max_dim));
  }
  EquilibriumSet found;
  for (int k = 1; k <= std::min(g.rows(), g.cols()); ++k) {
    const auto row_supports = Subsets(g.rows(), k);
    const auto col_supports = Subsets(g.cols(), k);
    for (const auto& rows : row_supports) {
      for (const auto& cols : col_supports) {
        // The column mix makes the row player indifferent over `rows`.
        auto col = Indifference(g.u1(), cols, rows, false, g.cols());
        if (!col) continue;
        auto row = Indifference(g.u2(), rows, cols, true, g.rows());
        if (!row) continue;
        if (!IsNashEquilibrium(g, *row, *col)) continue;
        Rational p1 = Bilinear(g.u1(), *row, *col);
        Rational p2 = Bilinear(g.u2(), *row, *col);
        found.push_back({std::move(*row), std::move(*col), std::move(p1),
                         std::move(p2)});
      }
    }
  }
  auto by_profile = [](const Equilibrium& a, const Equilibrium& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  };
  std::sort(found.begin(), found.end(), by_profile);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

bool EquilibriumInvarianceCheck(const BimatrixGame& g, const AffineTransform& t,
                                int max_dim) {
  const EquilibriumSet original = SupportEnumeration(g, max_dim);
  const BimatrixGame z = ToZeroSum(g, t);
  if (!IsZeroSum(z)) return false;
  const EquilibriumSet normalized = SupportEnumeration(z, max_dim);
  if (original.size() != normalized.size()) return false;
  for (std::size_t k = 0; k < original.size(); ++k) {
    const Equilibrium& e = original[k];
    const Equilibrium& z = normalized[k];
    if (e.row != z.row || e.col != z.col) return false;
    if (e.u1_payoff != (z.u1_payoff + t.beta()) / t.alpha()) return false;
    if (e.u2_payoff != z.u2_payoff) return false;
  }
  return true;
}

Json ToJson(const MinimaxSolution& s) {
  Json j;
  j["value"] = ToJson(s.value);
  j["row_strategy"] = ToJson(s.row_strategy);
  j["col_strategy"] = ToJson(s.col_strategy);
  return j;
}

Json ToJson(const EquilibriumSet& set) {
  Json out = Json::array();
  for (const Equilibrium& e : set) {
    Json j;
    j["row"] = ToJson(e.row);
    j["col"] = ToJson(e.col);
    j["u1_payoff"] = ToJson(e.u1_payoff);
    j["u2_payoff"] = ToJson(e.u2_payoff);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace zerosum
