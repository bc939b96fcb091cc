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

#ifndef ZEROSUM_GAME_H_
#define ZEROSUM_GAME_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "zerosum/rational.h"

namespace zerosum {

// Dense row-major payoff matrix.
class PayoffMatrix {
 public:
  PayoffMatrix() = default;
  PayoffMatrix(int rows, int cols, std::vector<Rational> entries);
  // Throws Error(kEmptyGame) for zero rows/cols and Error(kShapeMismatch) for
  // ragged input.
  static PayoffMatrix FromRows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return rows_ * cols_; }

  const Rational& operator()(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }
  // Row-major flat index.
  const Rational& at(int cell) const { return entries_[cell]; }
  std::span<const Rational> entries() const { return entries_; }

  bool IsConstant() const;

  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

enum class Player { kRow = 1, kCol = 2 };

inline Player Other(Player p) {
  return p == Player::kRow ? Player::kCol : Player::kRow;
}

// Pure profile (row action, column action), zero-based.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A finite two-player game in normal form. Immutable once constructed.
class BimatrixGame {
 public:
  // Throws Error(kShapeMismatch) or Error(kEmptyGame).
  BimatrixGame(PayoffMatrix u1, PayoffMatrix u2);
  static BimatrixGame FromRows(const std::vector<std::vector<Rational>>& u1,
                               const std::vector<std::vector<Rational>>& u2);

  int rows() const { return u1_.rows(); }
  int cols() const { return u1_.cols(); }
  int num_actions(Player p) const {
    return p == Player::kRow ? rows() : cols();
  }
  const PayoffMatrix& u1() const { return u1_; }
  const PayoffMatrix& u2() const { return u2_; }
  const PayoffMatrix& payoff(Player p) const {
    return p == Player::kRow ? u1_ : u2_;
  }

  Cell CellAt(int flat) const { return {flat / cols(), flat % cols()}; }
  int FlatIndex(Cell c) const { return c.row * cols() + c.col; }

  friend bool operator==(const BimatrixGame&, const BimatrixGame&) = default;

 private:
  PayoffMatrix u1_;
  PayoffMatrix u2_;
};

// A point of the probability simplex over one player's actions. Entries are
// nonnegative and sum to exactly one.
class MixedStrategy {
 public:
  // Throws Error(kInvalidStrategy) if the simplex invariants fail.
  explicit MixedStrategy(std::vector<Rational> probs);

  static MixedStrategy Pure(int num_actions, int action);
  static MixedStrategy Uniform(int num_actions);

  int size() const { return static_cast<int>(probs_.size()); }
  const Rational& operator[](int i) const { return probs_[i]; }
  std::span<const Rational> probs() const { return probs_; }
  // Indices with positive probability.
  std::vector<int> Support() const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;
  friend auto operator<=>(const MixedStrategy& a, const MixedStrategy& b) {
    return a.probs_ <=> b.probs_;
  }

 private:
  struct Unchecked {};
  MixedStrategy(Unchecked, std::vector<Rational> probs)
      : probs_(std::move(probs)) {}
  friend MixedStrategy Mix(const MixedStrategy&, const MixedStrategy&,
                           const Rational&);

  std::vector<Rational> probs_;
};

struct MixedProfile {
  MixedStrategy row;
  MixedStrategy col;

  const MixedStrategy& of(Player p) const {
    return p == Player::kRow ? row : col;
  }
  // Replaces one coordinate, i.e. (s_i, r_{-i}).
  MixedProfile With(Player p, MixedStrategy s) const;
  static MixedProfile Pure(const BimatrixGame& g, Cell c);

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;
  friend auto operator<=>(const MixedProfile&, const MixedProfile&) = default;
};

// Sum over cells of x(i) y(j) m(i, j). Throws Error(kDimensionMismatch).
Rational Bilinear(const PayoffMatrix& m, const MixedStrategy& x,
                  const MixedStrategy& y);

// Expected utility of `player` under the product distribution `p`.
Rational ExpectedUtility(const BimatrixGame& g, Player player,
                         const MixedProfile& p);

// Entrywise w p + (1 - w) q. Throws Error(kWeightOutOfRange) unless
// 0 <= w <= 1, Error(kDimensionMismatch) on unequal lengths.
MixedStrategy Mix(const MixedStrategy& p, const MixedStrategy& q,
                  const Rational& w);

// Samples (sigma, tau, alpha, beta) tuples and checks both bilinearity
// identities exactly for u1 and u2. Throws Error(kBadSpec) if samples < 1.
bool VerifyBilinearity(const BimatrixGame& g, int samples, std::uint64_t seed);

}  // namespace zerosum

#endif  // ZEROSUM_GAME_H_
