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

#include "zerosum/adversarial.h"

#include <utility>
#include <vector>

#include "zerosum/error.h"
#include "zerosum/sampling.h"

namespace zerosum {

AffineTransform::AffineTransform(Rational alpha, Rational beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.Sign() <= 0) {
    throw Error(ErrorCode::kAlphaNonpositive,
                "alpha = " + alpha_.ToString() + " must be positive");
  }
}

Rational AffineTransform::Apply(const Rational& u1_value) const {
  return -alpha_ * u1_value + beta_;
}

namespace {

bool BiconditionalHolds(const Rational& u1_sigma, const Rational& u1_tau,
                        const Rational& u2_sigma, const Rational& u2_tau) {
  return (u1_sigma >= u1_tau) == (u2_sigma <= u2_tau);
}

// Unique (alpha, beta) with u2 = -alpha u1 + beta at two points where u1
// differs.
std::pair<Rational, Rational> SolveCompatible(const Rational& u1_a,
                                              const Rational& u2_a,
                                              const Rational& u1_b,
                                              const Rational& u2_b) {
  Rational alpha = -(u2_b - u2_a) / (u1_b - u1_a);
  Rational beta = u2_a + alpha * u1_a;
  return {std::move(alpha), std::move(beta)};
}

DetectionResult Verify(const BimatrixGame& g, Cell first, Cell second) {
  const PayoffMatrix& u1 = g.u1();
  const PayoffMatrix& u2 = g.u2();
  auto [alpha, beta] =
      SolveCompatible(u1(first.row, first.col), u2(first.row, first.col),
                      u1(second.row, second.col), u2(second.row, second.col));
  DetectionResult result;
  if (alpha.Sign() <= 0) {
    result.witness =
        AlphaNonpositive{first, second, std::move(alpha), std::move(beta)};
    return result;
  }
  for (int cell = 0; cell < u1.size(); ++cell) {
    Rational expected = -alpha * u1.at(cell) + beta;
    if (expected != u2.at(cell)) {
      result.witness = AffineMismatch{g.CellAt(cell), std::move(expected),
                                      u2.at(cell), alpha, beta};
      return result;
    }
  }
  result.status = DetectionResult::Status::kAdversarial;
  result.transform.emplace(std::move(alpha), std::move(beta));
  return result;
}

}  // namespace

bool StrictlyCompetitiveOn(const BimatrixGame& g, const MixedProfile& sigma,
                           const MixedProfile& tau) {
  return BiconditionalHolds(ExpectedUtility(g, Player::kRow, sigma),
                            ExpectedUtility(g, Player::kRow, tau),
                            ExpectedUtility(g, Player::kCol, sigma),
                            ExpectedUtility(g, Player::kCol, tau));
}

std::optional<OrdinalViolation> FindPureOrdinalViolation(
    const BimatrixGame& g) {
  const PayoffMatrix& u1 = g.u1();
  const PayoffMatrix& u2 = g.u2();
  for (int s = 0; s < u1.size(); ++s) {
    for (int t = 0; t < u1.size(); ++t) {
      if (!BiconditionalHolds(u1.at(s), u1.at(t), u2.at(s), u2.at(t))) {
        return OrdinalViolation{g.CellAt(s), g.CellAt(t)};
      }
    }
  }
  return std::nullopt;
}

bool IsPureOrdinalCompetitive(const BimatrixGame& g) {
  return !FindPureOrdinalViolation(g).has_value();
}

DetectionResult DetectAffine(const BimatrixGame& g) {
  const PayoffMatrix& u1 = g.u1();
  int second = -1;
  for (int cell = 1; cell < u1.size(); ++cell) {
    if (u1.at(cell) != u1.at(0)) {
      second = cell;
      break;
    }
  }
  if (second < 0) {
    // Constant u1: every pair is a u1-tie, so u2 must be constant as well.
    DetectionResult result;
    if (g.u2().IsConstant()) {
      result.status = DetectionResult::Status::kDegenerate;
      result.transform.emplace(Rational(1), g.u2().at(0) + u1.at(0));
    } else {
      result.witness = *FindPureOrdinalViolation(g);
    }
    return result;
  }
  return Verify(g, g.CellAt(0), g.CellAt(second));
}

DetectionResult DetectAffine(const BimatrixGame& g, Cell first, Cell second) {
  if (first.row < 0 || first.row >= g.rows() || first.col < 0 ||
      first.col >= g.cols() || second.row < 0 || second.row >= g.rows() ||
      second.col < 0 || second.col >= g.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "anchor outside the game");
  }
  if (g.u1()(first.row, first.col) == g.u1()(second.row, second.col)) {
    throw Error(ErrorCode::kBadSpec, "anchors must have distinct u1 values");
  }
  return Verify(g, first, second);
}

bool IsAdversarial(const BimatrixGame& g) { return DetectAffine(g).adversarial(); }

std::optional<AffineTransform> ThreeProfileCompatibility(
    const BimatrixGame& g, const MixedProfile& p1, const MixedProfile& p2,
    const MixedProfile& p3) {
  const MixedProfile* profiles[] = {&p1, &p2, &p3};
  std::vector<Rational> e1, e2;
  for (const MixedProfile* p : profiles) {
    e1.push_back(ExpectedUtility(g, Player::kRow, *p));
    e2.push_back(ExpectedUtility(g, Player::kCol, *p));
  }
  int a = -1, b = -1;
  for (int i = 0; i < 3 && a < 0; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (e1[i] != e1[j]) {
        a = i;
        b = j;
        break;
      }
    }
  }
  if (a < 0) {
    if (e2[0] != e2[1] || e2[0] != e2[2]) return std::nullopt;
    return AffineTransform(Rational(1), e2[0] + e1[0]);
  }
  auto [alpha, beta] = SolveCompatible(e1[a], e2[a], e1[b], e2[b]);
  if (alpha.Sign() <= 0) return std::nullopt;
  for (int k = 0; k < 3; ++k) {
    if (e2[k] != -alpha * e1[k] + beta) return std::nullopt;
  }
  return AffineTransform(std::move(alpha), std::move(beta));
}

std::optional<MixedViolation> FindMixedViolation(const BimatrixGame& g,
                                                 int budget,
                                                 std::uint64_t seed) {
  if (budget < 1) throw Error(ErrorCode::kBadSpec, "budget must be >= 1");
  Rng rng = MakeRng(seed);
  for (int draw = 0; draw < budget; ++draw) {
    const auto pool = UniformInt(rng, 0, 2);
    MixedProfile sigma = pool == 2 ? RandomMixedProfile(rng, g)
                                   : RandomPureProfile(rng, g);
    MixedProfile tau = pool == 0 ? RandomPureProfile(rng, g)
                                 : RandomMixedProfile(rng, g);
    if (!StrictlyCompetitiveOn(g, sigma, tau)) {
      return MixedViolation{std::move(sigma), std::move(tau)};
    }
    if (!StrictlyCompetitiveOn(g, tau, sigma)) {
      return MixedViolation{std::move(tau), std::move(sigma)};
    }
  }
  return std::nullopt;
}

BimatrixGame ToZeroSum(const BimatrixGame& g, const AffineTransform& t) {
  std::vector<Rational> v1;
  v1.reserve(g.u1().size());
  for (const Rational& e : g.u1().entries()) {
    v1.push_back(t.alpha() * e - t.beta());
  }
  return BimatrixGame(PayoffMatrix(g.rows(), g.cols(), std::move(v1)), g.u2());
}

bool IsZeroSum(const BimatrixGame& g) {
  for (int cell = 0; cell < g.u1().size(); ++cell) {
    if (!(g.u1().at(cell) + g.u2().at(cell)).IsZero()) return false;
  }
  return true;
}

const char* StatusName(DetectionResult::Status status) {
  switch (status) {
    case DetectionResult::Status::kAdversarial: return "adversarial";
    case DetectionResult::Status::kDegenerate: return "degenerate";
    case DetectionResult::Status::kNotAdversarial: return "not_adversarial";
  }
  return "unknown";
}

Json ToJson(const Cell& c) {
  Json j;
  j["row"] = c.row + 1;
  j["col"] = c.col + 1;
  return j;
}

namespace {

struct WitnessToJson {
  Json operator()(const AffineMismatch& w) const {
    Json j;
    j["kind"] = "affine_mismatch";
    j["cell"] = ToJson(w.cell);
    j["expected"] = ToJson(w.expected);
    j["actual"] = ToJson(w.actual);
    j["candidate_alpha"] = ToJson(w.candidate_alpha);
    j["candidate_beta"] = ToJson(w.candidate_beta);
    return j;
  }
  Json operator()(const OrdinalViolation& w) const {
    Json j;
    j["kind"] = "ordinal_violation";
    j["sigma"] = ToJson(w.sigma);
    j["tau"] = ToJson(w.tau);
    return j;
  }
  Json operator()(const AlphaNonpositive& w) const {
    Json j;
    j["kind"] = "alpha_nonpositive";
    j["anchors"] = Json::array({ToJson(w.first), ToJson(w.second)});
    j["candidate_alpha"] = ToJson(w.alpha);
    j["candidate_beta"] = ToJson(w.beta);
    return j;
  }
};

}  // namespace

Json ToJson(const Witness& w) { return std::visit(WitnessToJson{}, w); }

Json ToJson(const DetectionResult& r) {
  Json j;
  j["status"] = StatusName(r.status);
  j["alpha"] = r.transform ? ToJson(r.transform->alpha()) : Json();
  j["beta"] = r.transform ? ToJson(r.transform->beta()) : Json();
  j["witness"] = r.witness ? ToJson(*r.witness) : Json();
  return j;
}

Json ToJson(const MixedProfile& p) {
  Json j;
  j["row"] = ToJson(p.row);
  j["col"] = ToJson(p.col);
  return j;
}

}  // namespace zerosum
