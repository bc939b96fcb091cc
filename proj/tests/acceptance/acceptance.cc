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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zerosum/adversarial.h"
#include "zerosum/axioms.h"
#include "zerosum/bench.h"
#include "zerosum/game.h"
#include "zerosum/generators.h"
#include "zerosum/mv.h"
#include "zerosum/sampling.h"
#include "zerosum/solvers.h"

namespace zerosum {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

GenSpec Spec(Family family, int rows, int cols, std::uint64_t seed) {
  GenSpec spec;
  spec.family = family;
  spec.rows = rows;
  spec.cols = cols;
  spec.seed = seed;
  spec.value_bound = 20;
  return spec;
}

// Criterion 1 corpus: square sizes 2..10, seeds 0..999.
std::vector<GenSpec> DisguisedCorpus() {
  std::vector<GenSpec> specs;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    specs.push_back(Spec(Family::kDisguisedZeroSum, n, n, seed));
  }
  return specs;
}

double Seconds(Clock::duration d) {
  return std::chrono::duration<double>(d).count();
}

bool ViolatesBiconditional(const BimatrixGame& g, const MixedProfile& s,
                           const MixedProfile& t) {
  const Rational s1 = ExpectedUtility(g, Player::kRow, s);
  const Rational t1 = ExpectedUtility(g, Player::kRow, t);
  const Rational s2 = ExpectedUtility(g, Player::kCol, s);
  const Rational t2 = ExpectedUtility(g, Player::kCol, t);
  return (s1 >= t1) != (t2 >= s2);
}

Outcome AffineRecovery() {
  int exact = 0;
  Clock::duration detect{};
  const std::vector<GenSpec> specs = DisguisedCorpus();
  for (const GenSpec& spec : specs) {
    const BimatrixGame g = Generate(spec);
    const AffineTransform planted = PlantedTransform(spec);
    const auto start = Clock::now();
    const DetectionResult r = DetectAffine(g);
    detect += Clock::now() - start;
    if (r.status == DetectionResult::Status::kAdversarial && r.transform &&
        *r.transform == planted) {
      ++exact;
    }
  }
  std::ostringstream d;
  d << exact << "/" << specs.size() << " exact, detection " << Seconds(detect)
    << " s";
  return {exact == static_cast<int>(specs.size()) && Seconds(detect) < 5.0,
          d.str()};
}

Outcome OrdinalSeparation() {
  constexpr int kGames = 500;
  int separated = 0, found = 0, exact_witnesses = 0;
  for (int k = 0; k < kGames; ++k) {
    const int rows = 2 + k % 4;
    const int cols = 2 + (k / 4) % 4;
    const std::uint64_t seed = 10000 + k;
    const BimatrixGame g = Generate(Spec(Family::kOrdinalNotAffine, rows, cols, seed));
    if (IsPureOrdinalCompetitive(g) && !IsAdversarial(g)) ++separated;
    const auto v = FindMixedViolation(g, 2000, seed);
    if (!v) continue;
    ++found;
    if (ViolatesBiconditional(g, v->sigma, v->tau) &&
        !StrictlyCompetitiveOn(g, v->sigma, v->tau)) {
      ++exact_witnesses;
    }
  }
  std::ostringstream d;
  d << "separated " << separated << "/" << kGames << ", witnesses " << found
    << "/" << kGames << ", exact " << exact_witnesses << "/" << found;
  return {separated == kGames && found >= 495 && exact_witnesses == found,
          d.str()};
}

Outcome NormalizationIdentity() {
  int zero = 0;
  const std::vector<GenSpec> specs = DisguisedCorpus();
  for (const GenSpec& spec : specs) {
    const BimatrixGame g = Generate(spec);
    const DetectionResult r = DetectAffine(g);
    if (!r.transform) continue;
    const BimatrixGame z = ToZeroSum(g, *r.transform);
    bool all_zero = true;
    for (int cell = 0; cell < z.u1().size(); ++cell) {
      all_zero = all_zero && (z.u1().at(cell) + z.u2().at(cell)).IsZero();
    }
    if (all_zero) ++zero;
  }
  std::ostringstream d;
  d << zero << "/" << specs.size() << " sum to zero";
  return {zero == static_cast<int>(specs.size()), d.str()};
}

Outcome AnchorIndependence() {
  constexpr int kGames = 100;
  int consistent = 0;
  long pairs = 0;
  for (int k = 0; k < kGames; ++k) {
    const int n = 2 + k % 9;
    const BimatrixGame g =
        Generate(Spec(Family::kDisguisedZeroSum, n, n, 20000 + k));
    const AffineTransform global = *DetectAffine(g).transform;
    bool ok = !g.u1().IsConstant();
    const int cells = g.u1().size();
    for (int a = 0; a < cells && ok; ++a) {
      for (int b = 0; b < cells && ok; ++b) {
        if (g.u1().at(a) == g.u1().at(b)) continue;
        ++pairs;
        const DetectionResult r = DetectAffine(g, g.CellAt(a), g.CellAt(b));
        ok = r.status == DetectionResult::Status::kAdversarial &&
             r.transform && *r.transform == global;
      }
    }
    if (ok) ++consistent;
  }
  std::ostringstream d;
  d << consistent << "/" << kGames << " games identical over " << pairs
    << " anchor pairs";
  return {consistent == kGames, d.str()};
}

Outcome TripleCompatibility() {
  constexpr int kGames = 100, kTriples = 50;
  int agree = 0;
  for (int k = 0; k < kGames; ++k) {
    const int rows = 2 + k % 5;
    const int cols = 2 + (k / 5) % 5;
    const BimatrixGame g =
        Generate(Spec(Family::kDisguisedZeroSum, rows, cols, 30000 + k));
    const AffineTransform global = *DetectAffine(g).transform;
    Rng rng = MakeRng(30000 + k, {5});
    for (int trial = 0; trial < kTriples; ++trial) {
      const MixedProfile p1 = RandomMixedProfile(rng, g);
      const MixedProfile p2 = RandomMixedProfile(rng, g);
      const MixedProfile p3 = RandomMixedProfile(rng, g);
      const auto t = ThreeProfileCompatibility(g, p1, p2, p3);
      if (t && *t == global) ++agree;
    }
  }
  std::ostringstream d;
  d << agree << "/" << kGames * kTriples << " triples";
  return {agree == kGames * kTriples, d.str()};
}

Outcome AxiomAudit() {
  constexpr int kGames = 200, kSamples = 200;
  int failures = 0, ms4_fired = 0, ms4_verified = 0, reports = 0;
  for (int k = 0; k < kGames; ++k) {
    const int rows = 1 + k % 5;
    const int cols = 1 + (k / 5) % 5;
    const BimatrixGame g = Generate(Spec(Family::kUniform, rows, cols, 40000 + k));
    for (Lens lens : {Lens::kNegU1, Lens::kU2}) {
      const AxiomReport report = AuditMixtureAxioms(g, lens, kSamples, 40000 + k);
      ++reports;
      for (const AxiomStats& s : report.axioms) failures += s.failures;
      const AxiomStats& ms4 = report.axioms[3];
      ms4_fired += ms4.samples - ms4.vacuous;
      ms4_verified += ms4.witnesses_verified;
    }
  }
  std::ostringstream d;
  d << reports << " audits, " << failures << " failures, MS4 witnesses "
    << ms4_verified << "/" << ms4_fired;
  return {failures == 0 && ms4_verified == ms4_fired, d.str()};
}

Outcome SolverCrossValidation() {
  int compared = 0, agree = 0;
  for (const GenSpec& spec : DisguisedCorpus()) {
    if (spec.rows > 5 || spec.cols > 5) continue;
    const BimatrixGame g = Generate(spec);
    const BimatrixGame z = ToZeroSum(g, *DetectAffine(g).transform);
    ++compared;
    const MinimaxSolution s = MinimaxSolve(z);
    const EquilibriumSet eq = SupportEnumeration(z);
    bool ok = !eq.empty() && CertifiesValue(z.u1(), s);
    for (const Equilibrium& e : eq) ok = ok && e.u1_payoff == s.value;
    if (ok) ++agree;
  }
  constexpr int kInvariance = 200;
  int invariant = 0;
  for (int k = 0; k < kInvariance; ++k) {
    const int rows = 2 + k % 3;
    const int cols = 2 + (k / 3) % 3;
    const GenSpec spec = Spec(Family::kDisguisedZeroSum, rows, cols, 50000 + k);
    if (EquilibriumInvarianceCheck(Generate(spec), PlantedTransform(spec))) {
      ++invariant;
    }
  }
  std::ostringstream d;
  d << "value agreement " << agree << "/" << compared << ", invariance "
    << invariant << "/" << kInvariance;
  return {compared > 0 && agree == compared && invariant == kInvariance,
          d.str()};
}

Outcome MvInclusion() {
  constexpr int kGames = 200;
  int found = 0, verified = 0;
  for (int k = 0; k < kGames; ++k) {
    const int rows = 2 + k % 9;
    const int cols = 2 + (k / 9) % 9;
    const BimatrixGame g =
        Generate(Spec(Family::kDisguisedZeroSum, rows, cols, 60000 + k));
    const auto d = StrategicallyZeroSumDetect(g);
    if (!d) continue;
    ++found;
    if (VerifyDecomposition(g, *d)) ++verified;
  }
  const BimatrixGame pd = BimatrixGame::FromRows(
      {{Rational(3), Rational(0)}, {Rational(5), Rational(1)}},
      {{Rational(3), Rational(5)}, {Rational(0), Rational(1)}});
  const bool pd_none = !StrategicallyZeroSumDetect(pd).has_value();
  std::ostringstream d;
  d << "decomposed " << found << "/" << kGames << ", re-verified " << verified
    << "/" << found << ", prisoner's dilemma "
    << (pd_none ? "none found" : "decomposed");
  return {found == kGames && verified == found && pd_none, d.str()};
}

Outcome BenchSanity() {
  BenchConfig config;
  config.families = {Family::kDisguisedZeroSum, Family::kStrategicZeroSum};
  for (int n : {2, 3, 4, 5, 10, 20, 50}) config.sizes.emplace_back(n, n);
  config.seeds = {0, 1, 2};
  config.enum_cap = 5;
  auto csv = [&](int threads) {
    config.threads = threads;
    const std::vector<BenchRecord> records = RunBench(config);
    std::ostringstream out;
    WriteBenchCsv(records, out, /*omit_timings=*/true);
    return std::make_pair(records, out.str());
  };
  const auto [records, first] = csv(0);
  const auto [unused, second] = csv(1);
  int lp = 0, compared = 0, agree = 0;
  for (const BenchRecord& r : records) {
    if (r.lp_ns) ++lp;
    if (r.agree) {
      ++compared;
      if (*r.agree) ++agree;
    }
  }
  const bool deterministic = first == second;
  std::ostringstream d;
  d << records.size() << " records, LP path " << lp << "/" << records.size()
    << ", agreement " << agree << "/" << compared << ", CSV "
    << (deterministic ? "deterministic" : "differs between runs");
  return {lp == static_cast<int>(records.size()) && compared > 0 &&
              agree == compared && deterministic,
          d.str()};
}

}  // namespace
}  // namespace zerosum

int main() {
  using zerosum::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"affine recovery", zerosum::AffineRecovery},
      {"ordinal separation", zerosum::OrdinalSeparation},
      {"normalization identity", zerosum::NormalizationIdentity},
      {"anchor independence", zerosum::AnchorIndependence},
      {"triple compatibility", zerosum::TripleCompatibility},
      {"axiom audit", zerosum::AxiomAudit},
      {"solver cross-validation", zerosum::SolverCrossValidation},
      {"strategic zero-sum inclusion", zerosum::MvInclusion},
      {"bench sanity", zerosum::BenchSanity},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << " ("
              << criteria[k].first << "): " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
