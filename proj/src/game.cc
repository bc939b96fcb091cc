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

#include "zerosum/game.h"

#include <string>

#include "zerosum/error.h"
#include "zerosum/sampling.h"

namespace zerosum {

PayoffMatrix::PayoffMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ <= 0 || cols_ <= 0) {
    throw Error(ErrorCode::kEmptyGame, "payoff matrix has an empty dimension");
  }
  if (entries_.size() != static_cast<std::size_t>(rows_) * cols_) {
    throw Error(ErrorCode::kShapeMismatch,
                "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                    std::to_string(entries_.size()));
  }
}

PayoffMatrix PayoffMatrix::FromRows(
    const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorCode::kEmptyGame, "payoff matrix has an empty dimension");
  }
  const int cols = static_cast<int>(rows.front().size());
  std::vector<Rational> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols) {
      throw Error(ErrorCode::kShapeMismatch, "ragged payoff matrix");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return PayoffMatrix(static_cast<int>(rows.size()), cols, std::move(flat));
}

bool PayoffMatrix::IsConstant() const {
  for (const Rational& e : entries_) {
    if (e != entries_.front()) return false;
  }
  return true;
}

BimatrixGame::BimatrixGame(PayoffMatrix u1, PayoffMatrix u2)
    : u1_(std::move(u1)), u2_(std::move(u2)) {
  if (u1_.size() == 0 || u2_.size() == 0) {
    throw Error(ErrorCode::kEmptyGame, "game has no action profiles");
  }
  if (u1_.rows() != u2_.rows() || u1_.cols() != u2_.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                "u1 is " + std::to_string(u1_.rows()) + "x" +
                    std::to_string(u1_.cols()) + " but u2 is " +
                    std::to_string(u2_.rows()) + "x" +
                    std::to_string(u2_.cols()));
  }
}

BimatrixGame BimatrixGame::FromRows(
    const std::vector<std::vector<Rational>>& u1,
    const std::vector<std::vector<Rational>>& u2) {
  return BimatrixGame(PayoffMatrix::FromRows(u1), PayoffMatrix::FromRows(u2));
}

MixedStrategy::MixedStrategy(std::vector<Rational> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw Error(ErrorCode::kInvalidStrategy, "strategy over no actions");
  }
  Rational total;
  for (const Rational& p : probs_) {
    if (p.Sign() < 0) {
      throw Error(ErrorCode::kInvalidStrategy,
                  "negative probability " + p.ToString());
    }
    total += p;
  }
  if (total != Rational(1)) {
    throw Error(ErrorCode::kInvalidStrategy,
                "probabilities sum to " + total.ToString());
  }
}

MixedStrategy MixedStrategy::Pure(int num_actions, int action) {
  std::vector<Rational> probs(num_actions);
  probs.at(action) = 1;
  return MixedStrategy(std::move(probs));
}

MixedStrategy MixedStrategy::Uniform(int num_actions) {
  return MixedStrategy(
      std::vector<Rational>(num_actions, Rational(1, num_actions)));
}

std::vector<int> MixedStrategy::Support() const {
  std::vector<int> support;
  for (int i = 0; i < size(); ++i) {
    if (!probs_[i].IsZero()) support.push_back(i);
  }
  return support;
}

MixedProfile MixedProfile::With(Player p, MixedStrategy s) const {
  MixedProfile out = *this;
  (p == Player::kRow ? out.row : out.col) = std::move(s);
  return out;
}

MixedProfile MixedProfile::Pure(const BimatrixGame& g, Cell c) {
  return {MixedStrategy::Pure(g.rows(), c.row),
          MixedStrategy::Pure(g.cols(), c.col)};
}

Rational Bilinear(const PayoffMatrix& m, const MixedStrategy& x,
                  const MixedStrategy& y) {
  if (x.size() != m.rows() || y.size() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "profile is " + std::to_string(x.size()) + "x" +
                    std::to_string(y.size()) + " but game is " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  Rational total;
  for (int i = 0; i < m.rows(); ++i) {
    if (x[i].IsZero()) continue;
    Rational row_sum;
    for (int j = 0; j < m.cols(); ++j) {
      if (y[j].IsZero()) continue;
      row_sum += y[j] * m(i, j);
    }
    total += x[i] * row_sum;
  }
  return total;
}

Rational ExpectedUtility(const BimatrixGame& g, Player player,
                         const MixedProfile& p) {
  return Bilinear(g.payoff(player), p.row, p.col);
}

MixedStrategy Mix(const MixedStrategy& p, const MixedStrategy& q,
                  const Rational& w) {
  if (w.Sign() < 0 || w > Rational(1)) {
    throw Error(ErrorCode::kWeightOutOfRange,
                "mixture weight " + w.ToString() + " outside [0, 1]");
  }
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "mixing strategies of length " + std::to_string(p.size()) +
                    " and " + std::to_string(q.size()));
  }
  const Rational rest = Rational(1) - w;
  std::vector<Rational> out;
  out.reserve(p.size());
  for (int i = 0; i < p.size(); ++i) out.push_back(w * p[i] + rest * q[i]);
  // Convex combinations of simplex points stay on the simplex exactly.
  return MixedStrategy(MixedStrategy::Unchecked{}, std::move(out));
}

bool VerifyBilinearity(const BimatrixGame& g, int samples, std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::kBadSpec, "samples must be >= 1");
  Rng rng = MakeRng(seed);
  for (int s = 0; s < samples; ++s) {
    const MixedProfile sigma = RandomMixedProfile(rng, g);
    const MixedProfile tau = RandomMixedProfile(rng, g);
    const Rational a = RandomWeight(rng);
    const Rational b = RandomWeight(rng);
    const MixedStrategy row_mix = Mix(sigma.row, tau.row, a);
    const MixedStrategy col_mix = Mix(sigma.col, tau.col, b);
    for (const PayoffMatrix* m : {&g.u1(), &g.u2()}) {
      const Rational joint = Bilinear(*m, row_mix, col_mix);
      const Rational by_row = a * Bilinear(*m, sigma.row, col_mix) +
                              (Rational(1) - a) * Bilinear(*m, tau.row, col_mix);
      const Rational by_col = b * Bilinear(*m, row_mix, sigma.col) +
                              (Rational(1) - b) * Bilinear(*m, row_mix, tau.col);
      if (joint != by_row || joint != by_col) return false;
    }
  }
  return true;
}

}  // namespace zerosum
