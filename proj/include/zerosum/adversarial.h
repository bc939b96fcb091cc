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

#ifndef ZEROSUM_ADVERSARIAL_H_
#define ZEROSUM_ADVERSARIAL_H_

#include <cstdint>
#include <optional>
#include <variant>

#include "zerosum/game.h"
#include "zerosum/game_json.h"
#include "zerosum/rational.h"

// Detection of strictly competitive (adversarial) two-player games.
//
// A finite game's mixed extension is adversarial exactly when
// u2 = -alpha * u1 + beta holds on every pure profile for some alpha > 0.
// DetectAffine decides this exactly: it fixes two anchor profiles with
// distinct u1 values, solves for the unique compatible (alpha, beta) and then
// checks every remaining cell against it. The affine relation extends to all
// mixed profiles by bilinearity, so no search over mixed space is needed.

namespace zerosum {

// Pair (alpha, beta) with alpha > 0, read as u2 = -alpha * u1 + beta.
class AffineTransform {
 public:
  // Throws Error(kAlphaNonpositive) unless alpha > 0.
  AffineTransform(Rational alpha, Rational beta);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }

  // -alpha * x + beta.
  Rational Apply(const Rational& u1_value) const;

  friend bool operator==(const AffineTransform&,
                         const AffineTransform&) = default;

 private:
  Rational alpha_;
  Rational beta_;
};

// u2[cell] differs from -alpha * u1[cell] + beta for the anchor-derived
// candidate.
struct AffineMismatch {
  Cell cell;
  Rational expected;
  Rational actual;
  Rational candidate_alpha;
  Rational candidate_beta;
  friend bool operator==(const AffineMismatch&, const AffineMismatch&) = default;
};

// Ordered pure pair on which "u1(sigma) >= u1(tau) iff u2(sigma) <= u2(tau)"
// fails.
struct OrdinalViolation {
  Cell sigma;
  Cell tau;
  friend bool operator==(const OrdinalViolation&,
                         const OrdinalViolation&) = default;
};

// The anchors force a compatible pair with alpha <= 0.
struct AlphaNonpositive {
  Cell first;
  Cell second;
  Rational alpha;
  Rational beta;
  friend bool operator==(const AlphaNonpositive&,
                         const AlphaNonpositive&) = default;
};

using Witness = std::variant<AffineMismatch, OrdinalViolation, AlphaNonpositive>;

struct DetectionResult {
  enum class Status { kAdversarial, kDegenerate, kNotAdversarial };

  Status status = Status::kNotAdversarial;
  // Set for kAdversarial and kDegenerate.
  std::optional<AffineTransform> transform;
  // Set for kNotAdversarial.
  std::optional<Witness> witness;

  bool adversarial() const { return status != Status::kNotAdversarial; }
};

// Checks the strict-competition biconditional on the ordered pair (sigma, tau).
bool StrictlyCompetitiveOn(const BimatrixGame& g, const MixedProfile& sigma,
                           const MixedProfile& tau);

// First ordered pure pair (row-major scan, sigma outer) violating the
// biconditional, or nullopt when the pure restriction is ordinally
// competitive.
std::optional<OrdinalViolation> FindPureOrdinalViolation(const BimatrixGame& g);
bool IsPureOrdinalCompetitive(const BimatrixGame& g);

DetectionResult DetectAffine(const BimatrixGame& g);
// Same procedure with caller-chosen anchors. Throws Error(kBadSpec) if
// u1 agrees on the two anchors.
DetectionResult DetectAffine(const BimatrixGame& g, Cell first, Cell second);

bool IsAdversarial(const BimatrixGame& g);

// Looks for (alpha, beta), alpha > 0, with E2(p) = -alpha E1(p) + beta on all
// three profiles. When the three E1 values coincide the E2 values must too,
// and the canonical (1, E2 + E1) is returned.
std::optional<AffineTransform> ThreeProfileCompatibility(
    const BimatrixGame& g, const MixedProfile& p1, const MixedProfile& p2,
    const MixedProfile& p3);

struct MixedViolation {
  MixedProfile sigma;
  MixedProfile tau;
};

// Randomized falsifier over the mixed extension. Each of `budget` draws takes
// one of pure x pure, pure x random, random x random with equal probability
// and tests both orders. A nullopt result proves nothing.
std::optional<MixedViolation> FindMixedViolation(const BimatrixGame& g,
                                                 int budget,
                                                 std::uint64_t seed);

// (alpha * u1 - beta, u2).
BimatrixGame ToZeroSum(const BimatrixGame& g, const AffineTransform& t);

bool IsZeroSum(const BimatrixGame& g);

const char* StatusName(DetectionResult::Status status);
Json ToJson(const Cell& c);  // one-based {"row", "col"}
Json ToJson(const Witness& w);
Json ToJson(const DetectionResult& r);
Json ToJson(const MixedProfile& p);

}  // namespace zerosum

#endif  // ZEROSUM_ADVERSARIAL_H_
