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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_util.h"
#include "zerosum/adversarial.h"
#include "zerosum/error.h"
#include "zerosum/generators.h"
#include "zerosum/sampling.h"

namespace zerosum {
namespace {

using testing::IntGame;
using testing::Q;

BimatrixGame Disguised(int n, std::uint64_t seed) {
  GenSpec spec;
  spec.family = Family::kDisguisedZeroSum;
  spec.rows = n;
  spec.cols = n + static_cast<int>(seed % 2);
  spec.seed = seed;
  return Generate(spec);
}

TEST_CASE("pure_ordinal_competitive") {
  CHECK(IsPureOrdinalCompetitive(testing::MatchingPennies()));
  CHECK(IsPureOrdinalCompetitive(testing::CubeGame()));
  const auto v = FindPureOrdinalViolation(testing::PrisonersDilemma());
  REQUIRE(v.has_value());
  CHECK(*v == OrdinalViolation{{0, 0}, {1, 1}});
}

TEST_CASE("detect_affine on the reference games") {
  SUBCASE("matching pennies is already zero-sum") {
    const DetectionResult r = DetectAffine(testing::MatchingPennies());
    CHECK(r.status == DetectionResult::Status::kAdversarial);
    CHECK(*r.transform == AffineTransform(Q(1), Q(0)));
  }
  SUBCASE("disguised pennies recovers (2, 3)") {
    const DetectionResult r = DetectAffine(testing::DisguisedPennies());
    CHECK(r.status == DetectionResult::Status::kAdversarial);
    CHECK(*r.transform == AffineTransform(Q(2), Q(3)));
  }
  SUBCASE("cube game mismatches at cell (2,1)") {
    const DetectionResult r = DetectAffine(testing::CubeGame());
    CHECK(r.status == DetectionResult::Status::kNotAdversarial);
    CHECK(!r.transform.has_value());
    REQUIRE(r.witness.has_value());
    const auto& w = std::get<AffineMismatch>(*r.witness);
    CHECK(w.cell == Cell{1, 0});
    CHECK(w.expected == Q(-2));
    CHECK(w.actual == Q(-8));
    CHECK(w.candidate_alpha == Q(1));
    CHECK(w.candidate_beta == Q(0));
  }
  SUBCASE("constant payoffs are degenerate with the canonical pair") {
    const DetectionResult r =
        DetectAffine(IntGame({{3, 3}, {3, 3}}, {{5, 5}, {5, 5}}));
    CHECK(r.status == DetectionResult::Status::kDegenerate);
    CHECK(*r.transform == AffineTransform(Q(1), Q(8)));
    CHECK(r.adversarial());
  }
  SUBCASE("constant u1 with varying u2 has an ordinal witness") {
    const BimatrixGame g = IntGame({{3, 3}, {3, 3}}, {{5, 5}, {7, 5}});
    const DetectionResult r = DetectAffine(g);
    CHECK(r.status == DetectionResult::Status::kNotAdversarial);
    const auto& w = std::get<OrdinalViolation>(*r.witness);
    CHECK_FALSE(StrictlyCompetitiveOn(g, MixedProfile::Pure(g, w.sigma),
                                      MixedProfile::Pure(g, w.tau)));
  }
  SUBCASE("same-direction payoffs give alpha <= 0") {
    const BimatrixGame g = IntGame({{1, 2}}, {{1, 2}});
    const DetectionResult r = DetectAffine(g);
    const auto& w = std::get<AlphaNonpositive>(*r.witness);
    CHECK(w.alpha == Q(-1));
    CHECK(w.first == Cell{0, 0});
    CHECK(w.second == Cell{0, 1});
  }
  SUBCASE("1x1 games are degenerate") {
    const DetectionResult r = DetectAffine(IntGame({{3}}, {{-3}}));
    CHECK(r.status == DetectionResult::Status::kDegenerate);
    CHECK(*r.transform == AffineTransform(Q(1), Q(0)));
  }
}

TEST_CASE("is_adversarial") {
  CHECK(IsAdversarial(testing::MatchingPennies()));
  CHECK_FALSE(IsAdversarial(testing::CubeGame()));
  CHECK_FALSE(IsAdversarial(testing::PrisonersDilemma()));
}

TEST_CASE("explicit anchors must differ in u1") {
  CHECK_THROWS_AS(DetectAffine(testing::MatchingPennies(), {0, 0}, {1, 1}),
                  Error);
  CHECK_THROWS_AS(DetectAffine(testing::MatchingPennies(), {0, 0}, {2, 1}),
                  Error);
}

TEST_CASE("three_profile_compatibility") {
  const BimatrixGame d = testing::DisguisedPennies();
  auto pure = [](const BimatrixGame& g, int r, int c) {
    return MixedProfile::Pure(g, {r, c});
  };
  // u1 takes 1 and -1 here; the first two already differ.
  CHECK(ThreeProfileCompatibility(d, pure(d, 0, 0), pure(d, 0, 1),
                                  pure(d, 1, 0)) == AffineTransform(Q(2), Q(3)));

  const BimatrixGame mp = testing::MatchingPennies();
  const MixedProfile same = pure(mp, 0, 1);
  CHECK(ThreeProfileCompatibility(mp, same, same, same) ==
        AffineTransform(Q(1), Q(0)));

  const BimatrixGame cube = testing::CubeGame();
  CHECK_FALSE(ThreeProfileCompatibility(cube, pure(cube, 0, 0),
                                        pure(cube, 0, 1), pure(cube, 1, 0))
                  .has_value());

  const MixedProfile wrong{MixedStrategy::Uniform(3), MixedStrategy::Uniform(2)};
  CHECK_THROWS_AS(ThreeProfileCompatibility(mp, wrong, same, same), Error);
}

TEST_CASE("find_mixed_violation") {
  const BimatrixGame cube = testing::CubeGame();
  const MixedProfile pure21 = MixedProfile::Pure(cube, {1, 0});
  const MixedProfile center{MixedStrategy::Uniform(2), MixedStrategy::Uniform(2)};
  CHECK(ExpectedUtility(cube, Player::kRow, center) == Q(7, 4));
  CHECK(ExpectedUtility(cube, Player::kCol, center) == Q(-73, 4));
  CHECK_FALSE(StrictlyCompetitiveOn(cube, pure21, center));

  const auto found = FindMixedViolation(cube, 2000, 1);
  REQUIRE(found.has_value());
  CHECK_FALSE(StrictlyCompetitiveOn(cube, found->sigma, found->tau));

  CHECK_FALSE(FindMixedViolation(testing::MatchingPennies(), 2000, 1));
  CHECK_FALSE(FindMixedViolation(testing::DisguisedPennies(), 2000, 1));

  const BimatrixGame pd = testing::PrisonersDilemma();
  const auto pd_found = FindMixedViolation(pd, 2000, 1);
  REQUIRE(pd_found.has_value());
  CHECK_FALSE(StrictlyCompetitiveOn(pd, pd_found->sigma, pd_found->tau));

  CHECK_THROWS_AS(FindMixedViolation(cube, 0, 1), Error);
}

TEST_CASE("to_zero_sum") {
  const BimatrixGame z =
      ToZeroSum(testing::DisguisedPennies(), AffineTransform(Q(2), Q(3)));
  CHECK(z.u1() == IntGame({{-1, -5}, {-5, -1}}, {{0, 0}, {0, 0}}).u1());
  CHECK(IsZeroSum(z));

  const BimatrixGame mp = testing::MatchingPennies();
  CHECK(ToZeroSum(mp, AffineTransform(Q(1), Q(0))) == mp);

  try {
    ToZeroSum(mp, AffineTransform(Q(-1), Q(0)));
    FAIL("negative alpha accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kAlphaNonpositive);
  }
}

TEST_CASE("property: planted disguises are recovered exactly") {
  Rng rng = MakeRng(99);
  for (int trial = 0; trial < 100; ++trial) {
    GenSpec spec;
    spec.rows = static_cast<int>(UniformInt(rng, 1, 6));
    spec.cols = static_cast<int>(UniformInt(rng, 2, 6));
    spec.seed = static_cast<std::uint64_t>(trial);
    spec.family = Family::kUniform;
    const PayoffMatrix core = Generate(spec).u1();
    if (core.IsConstant()) continue;
    const AffineTransform t(Rational(UniformInt(rng, 1, 64), UniformInt(rng, 1, 8)),
                            Rational(UniformInt(rng, -80, 80), UniformInt(rng, 1, 8)));
    const DetectionResult r = DetectAffine(Disguise(core, t));
    REQUIRE(r.status == DetectionResult::Status::kAdversarial);
    CHECK(*r.transform == t);
  }
}

TEST_CASE("property: every valid anchor pair yields the same transform") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const BimatrixGame g = Disguised(2 + static_cast<int>(seed % 4), seed);
    const AffineTransform global = *DetectAffine(g).transform;
    const int cells = g.rows() * g.cols();
    for (int a = 0; a < cells; ++a) {
      for (int b = 0; b < cells; ++b) {
        if (g.u1().at(a) == g.u1().at(b)) continue;
        const DetectionResult r = DetectAffine(g, g.CellAt(a), g.CellAt(b));
        CHECK(*r.transform == global);
      }
    }
  }
}

TEST_CASE("property: adversarial games never violate on sampled pairs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const BimatrixGame g = Disguised(2 + static_cast<int>(seed % 4), seed);
    REQUIRE(IsAdversarial(g));
    Rng rng = MakeRng(seed, {5});
    for (int k = 0; k < 100; ++k) {
      const MixedProfile s = RandomMixedProfile(rng, g);
      const MixedProfile t = RandomMixedProfile(rng, g);
      CHECK(StrictlyCompetitiveOn(g, s, t));
      CHECK(StrictlyCompetitiveOn(g, t, s));
    }
  }
}

TEST_CASE("property: triples agree with the global transform") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const BimatrixGame g = Disguised(3, seed);
    const AffineTransform global = *DetectAffine(g).transform;
    Rng rng = MakeRng(seed, {6});
    for (int k = 0; k < 20; ++k) {
      const auto t = ThreeProfileCompatibility(g, RandomMixedProfile(rng, g),
                                               RandomMixedProfile(rng, g),
                                               RandomMixedProfile(rng, g));
      REQUIRE(t.has_value());
      CHECK(*t == global);
    }
  }
}

TEST_CASE("property: normalization sums to zero") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const BimatrixGame g = Disguised(2 + static_cast<int>(seed % 6), seed);
    CHECK(IsZeroSum(ToZeroSum(g, *DetectAffine(g).transform)));
  }
}

TEST_CASE("pure ordinal competition is strictly weaker") {
  const BimatrixGame cube = testing::CubeGame();
  CHECK(IsPureOrdinalCompetitive(cube));
  CHECK_FALSE(IsAdversarial(cube));
}

TEST_CASE("detection JSON") {
  const Json adv = ToJson(DetectAffine(testing::MatchingPennies()));
  CHECK(adv.dump() ==
        R"({"status":"adversarial","alpha":"1/1","beta":"0/1","witness":null})");
  const Json cube = ToJson(DetectAffine(testing::CubeGame()));
  CHECK(cube["status"] == "not_adversarial");
  CHECK(cube["alpha"].is_null());
  CHECK(cube["witness"]["kind"] == "affine_mismatch");
  CHECK(cube["witness"]["cell"]["row"] == 2);
  CHECK(cube["witness"]["cell"]["col"] == 1);
  CHECK(cube["witness"]["expected"] == "-2/1");
  CHECK(cube["witness"]["actual"] == "-8/1");
  const Json pd = ToJson(DetectAffine(IntGame({{1, 1}}, {{1, 2}})));
  CHECK(pd["witness"]["kind"] == "ordinal_violation");
}

}  // namespace
}  // namespace zerosum
