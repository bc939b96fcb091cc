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

#include "zerosum/axioms.h"

#include <vector>

#include "zerosum/adversarial.h"
#include "zerosum/error.h"
#include "zerosum/sampling.h"

namespace zerosum {

const char* LensName(Lens lens) {
  return lens == Lens::kNegU1 ? "neg-u1" : "u2";
}

Lens ParseLens(const std::string& text) {
  if (text == "neg-u1" || text == "neg_u1" || text == "negu1") {
    return Lens::kNegU1;
  }
  if (text == "u2") return Lens::kU2;
  throw Error(ErrorCode::kParseError, "unknown lens '" + text + "'");
}

Rational InducedPreference::Utility(const MixedProfile& p) const {
  return lens_ == Lens::kNegU1 ? -ExpectedUtility(*game_, Player::kRow, p)
                               : ExpectedUtility(*game_, Player::kCol, p);
}

std::optional<std::pair<Rational, Rational>> SolvabilityWitness(
    const InducedPreference& pref, const MixedProfile& p, const MixedProfile& q,
    Player player, const MixedStrategy& r) {
  const Rational up = pref.Utility(p);
  const Rational uq = pref.Utility(q);
  const Rational ur = pref.Utility(p.With(player, r));
  if (!(up < uq && uq < ur)) return std::nullopt;
  // Utility along the segment is w * up + (1 - w) * ur.
  const Rational span = ur - up;
  const Rational low_target = (up + uq) / Rational(2);
  const Rational high_target = (uq + ur) / Rational(2);
  return std::make_pair((ur - low_target) / span, (ur - high_target) / span);
}

bool AxiomReport::passed() const {
  for (const AxiomStats& a : axioms) {
    if (a.failures != 0) return false;
  }
  return true;
}

namespace {

enum Axiom { kMs1, kMs2, kMs3, kMs4, kMs5 };

MixedProfile SampleProfile(Rng& rng, const BimatrixGame& g) {
  // Pure profiles make ties likely, which exercises the indifference paths.
  return UniformInt(rng, 0, 3) == 0 ? RandomPureProfile(rng, g)
                                    : RandomMixedProfile(rng, g);
}

Player SamplePlayer(Rng& rng) {
  return UniformInt(rng, 0, 1) == 0 ? Player::kRow : Player::kCol;
}

MixedStrategy SampleStrategy(Rng& rng, const BimatrixGame& g, Player p) {
  const int n = g.num_actions(p);
  if (UniformInt(rng, 0, 3) == 0) {
    return MixedStrategy::Pure(n, static_cast<int>(UniformInt(rng, 0, n - 1)));
  }
  return RandomMixedStrategy(rng, n);
}

int PlayerIndex(Player p) { return p == Player::kRow ? 1 : 2; }

void RecordFailure(AxiomStats& stats, Json counterexample) {
  ++stats.failures;
  if (!stats.first_counterexample) {
    stats.first_counterexample = std::move(counterexample);
  }
}

void AuditTotalPreorder(const InducedPreference& pref, Rng& rng,
                        AxiomStats& stats) {
  const BimatrixGame& g = pref.game();
  const MixedProfile p = SampleProfile(rng, g);
  const MixedProfile q = SampleProfile(rng, g);
  const MixedProfile r = SampleProfile(rng, g);
  bool ok = pref.Weak(p, q) || pref.Weak(q, p);
  // Some ordering of any triple chains, so transitivity is never vacuous.
  const MixedProfile* t[] = {&p, &q, &r};
  constexpr int kOrders[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                 {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& o : kOrders) {
    const MixedProfile& a = *t[o[0]];
    const MixedProfile& b = *t[o[1]];
    const MixedProfile& c = *t[o[2]];
    if (pref.Weak(a, b) && pref.Weak(b, c)) ok = ok && pref.Weak(a, c);
  }
  if (!ok) {
    RecordFailure(stats, Json{{"p", ToJson(p)}, {"q", ToJson(q)},
                              {"r", ToJson(r)}});
  }
}

void AuditCommutativity(const InducedPreference& pref, Rng& rng,
                        AxiomStats& stats) {
  const BimatrixGame& g = pref.game();
  const Player i = SamplePlayer(rng);
  const MixedStrategy p = SampleStrategy(rng, g, i);
  const MixedStrategy q = SampleStrategy(rng, g, i);
  const MixedProfile r = SampleProfile(rng, g);
  const Rational a = RandomWeight(rng);
  const MixedProfile lhs = r.With(i, Mix(p, q, a));
  const MixedProfile rhs = r.With(i, Mix(q, p, Rational(1) - a));
  if (!pref.Indifferent(lhs, rhs)) {
    RecordFailure(stats, Json{{"player", PlayerIndex(i)},
                              {"p", ToJson(p)},
                              {"q", ToJson(q)},
                              {"r", ToJson(r)},
                              {"alpha", ToJson(a)}});
  }
}

void AuditDistributivity(const InducedPreference& pref, Rng& rng,
                         AxiomStats& stats) {
  const BimatrixGame& g = pref.game();
  const Player i = SamplePlayer(rng);
  const MixedStrategy p = SampleStrategy(rng, g, i);
  const MixedStrategy q = SampleStrategy(rng, g, i);
  const MixedProfile r = SampleProfile(rng, g);
  const Rational a = RandomWeight(rng);
  const Rational b = RandomWeight(rng);
  const MixedProfile lhs = r.With(i, Mix(Mix(p, q, a), q, b));
  const MixedProfile rhs = r.With(i, Mix(p, q, a * b));
  if (!pref.Indifferent(lhs, rhs)) {
    RecordFailure(stats, Json{{"player", PlayerIndex(i)},
                              {"p", ToJson(p)},
                              {"q", ToJson(q)},
                              {"r", ToJson(r)},
                              {"alpha", ToJson(a)},
                              {"beta", ToJson(b)}});
  }
}

// Pure action of `player` maximizing represented utility against p_-i.
MixedStrategy BestPureAgainst(const InducedPreference& pref,
                              const MixedProfile& p, Player player) {
  const int n = pref.game().num_actions(player);
  int best = 0;
  Rational best_value;
  for (int k = 0; k < n; ++k) {
    Rational v = pref.Utility(p.With(player, MixedStrategy::Pure(n, k)));
    if (k == 0 || v > best_value) {
      best = k;
      best_value = std::move(v);
    }
  }
  return MixedStrategy::Pure(n, best);
}

void AuditSolvability(const InducedPreference& pref, Rng& rng,
                      AxiomStats& stats) {
  const BimatrixGame& g = pref.game();
  MixedProfile p = SampleProfile(rng, g);
  MixedProfile q = SampleProfile(rng, g);
  if (pref.Strict(q, p)) std::swap(p, q);
  const Player i = SamplePlayer(rng);
  MixedStrategy r = SampleStrategy(rng, g, i);
  if (!pref.Strict(p, q)) {
    ++stats.vacuous;
    return;
  }
  if (!pref.Strict(q, p.With(i, r))) r = BestPureAgainst(pref, p, i);
  const auto witness = SolvabilityWitness(pref, p, q, i, r);
  if (!witness) {
    ++stats.vacuous;
    return;
  }
  const auto& [a, b] = *witness;
  const Rational zero, one(1);
  const bool in_range = zero < a && a < one && zero < b && b < one;
  bool ok = in_range;
  if (in_range) {
    ok = pref.Strict(p.With(i, Mix(p.of(i), r, a)), q) &&
         pref.Strict(q, p.With(i, Mix(p.of(i), r, b)));
  }
  ++stats.witnesses_verified;
  if (!ok) {
    RecordFailure(stats, Json{{"player", PlayerIndex(i)},
                              {"p", ToJson(p)},
                              {"q", ToJson(q)},
                              {"r", ToJson(r)},
                              {"alpha", ToJson(a)},
                              {"beta", ToJson(b)}});
  }
}

// Some s_j with u(s_j, q_-j) equal to `target`, mixing the worst and best pure
// actions when no pure action hits it. Nullopt if the target is out of reach.
std::optional<MixedStrategy> MatchUtility(const InducedPreference& pref,
                                          const MixedProfile& q, Player j,
                                          const Rational& target) {
  const int n = pref.game().num_actions(j);
  std::vector<Rational> values;
  int lo = 0, hi = 0;
  for (int k = 0; k < n; ++k) {
    values.push_back(pref.Utility(q.With(j, MixedStrategy::Pure(n, k))));
    if (values[k] == target) return MixedStrategy::Pure(n, k);
    if (values[k] < values[lo]) lo = k;
    if (values[k] > values[hi]) hi = k;
  }
  if (target < values[lo] || target > values[hi]) return std::nullopt;
  const Rational w = (values[hi] - target) / (values[hi] - values[lo]);
  return Mix(MixedStrategy::Pure(n, lo), MixedStrategy::Pure(n, hi), w);
}

void AuditIndependence(const InducedPreference& pref, Rng& rng,
                       AxiomStats& stats) {
  const BimatrixGame& g = pref.game();
  MixedProfile p = SampleProfile(rng, g);
  MixedProfile q = SampleProfile(rng, g);
  if (pref.Strict(q, p)) std::swap(p, q);
  const Player i = SamplePlayer(rng);
  const Player j = SamplePlayer(rng);
  const MixedStrategy r = SampleStrategy(rng, g, i);
  const Rational a = RandomOpenWeight(rng);
  if (!pref.Strict(p, q)) {
    ++stats.vacuous;
    return;
  }
  const auto s = MatchUtility(pref, q, j, pref.Utility(p.With(i, r)));
  if (!s) {
    ++stats.vacuous;
    return;
  }
  const MixedProfile lhs = p.With(i, Mix(p.of(i), r, a));
  const MixedProfile rhs = q.With(j, Mix(q.of(j), *s, a));
  if (!pref.Indifferent(p.With(i, r), q.With(j, *s)) ||
      !pref.Strict(lhs, rhs)) {
    RecordFailure(stats, Json{{"i", PlayerIndex(i)},
                              {"j", PlayerIndex(j)},
                              {"p", ToJson(p)},
                              {"q", ToJson(q)},
                              {"r", ToJson(r)},
                              {"s", ToJson(*s)},
                              {"alpha", ToJson(a)}});
  }
}

}  // namespace

AxiomReport AuditMixtureAxioms(const BimatrixGame& g, Lens lens, int samples,
                               std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::kBadSpec, "samples must be >= 1");
  const InducedPreference pref(g, lens);
  AxiomReport report;
  report.lens = lens;
  using Audit = void (*)(const InducedPreference&, Rng&, AxiomStats&);
  constexpr Audit kAudits[] = {AuditTotalPreorder, AuditCommutativity,
                               AuditDistributivity, AuditSolvability,
                               AuditIndependence};
  for (int axiom = kMs1; axiom <= kMs5; ++axiom) {
    AxiomStats& stats = report.axioms[axiom];
    stats.name = "MS" + std::to_string(axiom + 1);
    Rng rng = MakeRng(seed, {static_cast<std::uint64_t>(axiom + 1)});
    for (int s = 0; s < samples; ++s) {
      kAudits[axiom](pref, rng, stats);
      ++stats.samples;
    }
  }
  return report;
}

Json ToJson(const AxiomReport& report) {
  Json j;
  j["lens"] = LensName(report.lens);
  j["passed"] = report.passed();
  Json axioms = Json::array();
  for (const AxiomStats& a : report.axioms) {
    Json entry;
    entry["axiom"] = a.name;
    entry["samples"] = a.samples;
    entry["vacuous"] = a.vacuous;
    entry["failures"] = a.failures;
    if (a.name == "MS4") entry["witnesses_verified"] = a.witnesses_verified;
    entry["first_counterexample"] =
        a.first_counterexample ? *a.first_counterexample : Json();
    axioms.push_back(std::move(entry));
  }
  j["axioms"] = std::move(axioms);
  return j;
}

}  // namespace zerosum
