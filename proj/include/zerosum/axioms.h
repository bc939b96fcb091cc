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

#ifndef ZEROSUM_AXIOMS_H_
#define ZEROSUM_AXIOMS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "zerosum/game.h"
#include "zerosum/game_json.h"
#include "zerosum/rational.h"

// Audit of the ordered bilinear mixture-space axioms MS1-MS5 for the
// preference a game induces on its mixed profiles.
//
// The preference is represented numerically by construction, so each axiom is
// checked at the level of represented utilities: indifference is equality and
// strict preference is strict inequality, all in exact arithmetic.

namespace zerosum {

// Which utility represents the preference: -E[u1] or E[u2].
enum class Lens { kNegU1, kU2 };

const char* LensName(Lens lens);
// Accepts "neg-u1"/"neg_u1"/"negu1" and "u2". Throws Error(kParseError).
Lens ParseLens(const std::string& text);

class InducedPreference {
 public:
  InducedPreference(const BimatrixGame& game, Lens lens)
      : game_(&game), lens_(lens) {}

  const BimatrixGame& game() const { return *game_; }
  Lens lens() const { return lens_; }

  Rational Utility(const MixedProfile& p) const;
  // p is weakly below q.
  bool Weak(const MixedProfile& p, const MixedProfile& q) const {
    return Utility(p) <= Utility(q);
  }
  bool Strict(const MixedProfile& p, const MixedProfile& q) const {
    return Utility(p) < Utility(q);
  }
  bool Indifferent(const MixedProfile& p, const MixedProfile& q) const {
    return Utility(p) == Utility(q);
  }

 private:
  const BimatrixGame* game_;
  Lens lens_;
};

// Mixture weights (alpha, beta) in (0, 1) for the solvability axiom: given
// p < q < (r_i, p_-i), mixing p_i with r_i at alpha lands strictly below q
// and at beta strictly above. Alpha targets the utility midpoint of p and q,
// beta the midpoint of q and (r_i, p_-i). Returns nullopt when the
// precondition does not hold.
std::optional<std::pair<Rational, Rational>> SolvabilityWitness(
    const InducedPreference& pref, const MixedProfile& p, const MixedProfile& q,
    Player player, const MixedStrategy& r);

struct AxiomStats {
  std::string name;
  int samples = 0;
  // Samples whose antecedent did not fire (MS4, MS5).
  int vacuous = 0;
  int failures = 0;
  // MS4 only: witnesses built and checked.
  int witnesses_verified = 0;
  std::optional<Json> first_counterexample;
};

struct AxiomReport {
  Lens lens = Lens::kNegU1;
  std::array<AxiomStats, 5> axioms;

  bool passed() const;
};

// Throws Error(kBadSpec) if samples < 1.
AxiomReport AuditMixtureAxioms(const BimatrixGame& g, Lens lens, int samples,
                               std::uint64_t seed);

Json ToJson(const AxiomReport& report);

}  // namespace zerosum

#endif  // ZEROSUM_AXIOMS_H_
