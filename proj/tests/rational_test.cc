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
#include "zerosum/error.h"
#include "zerosum/rational.h"
#include "zerosum/sampling.h"

namespace zerosum {
namespace {

TEST_CASE("fractions are stored in lowest terms with positive denominator") {
  CHECK(Rational(6, 8).ToString() == "3/4");
  CHECK(Rational(3, -6).ToString() == "-1/2");
  CHECK(Rational(0, -5).ToString() == "0/1");
  CHECK(Rational().ToString() == "0/1");
  CHECK(Rational(7).ToString() == "7/1");
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(-Rational(2, 3) == Rational(-2, 3));
  CHECK(Abs(Rational(-5, 2)) == Rational(5, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
}

TEST_CASE("large values do not overflow") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1'000'000'007);
  CHECK((big / big) == Rational(1));
  CHECK(big.Numerator().size() > 300);
  CHECK(big.IsInteger());
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational(1, 0), Error);
  try {
    Rational(3) /= Rational();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDivisionByZero);
  }
}

TEST_CASE("parsing") {
  CHECK(Rational::Parse("3/4") == Rational(3, 4));
  CHECK(Rational::Parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::Parse("12", /*allow_integer=*/true) == Rational(12));
  CHECK(Rational::Parse("123456789012345678901234567890/1").Numerator() ==
        "123456789012345678901234567890");
  for (const char* bad : {"", "1/0", "1/", "/2", "a/b", "1/-2", "--1/2",
                          "1.5/2", " 1/2", "12"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::Parse(bad), Error);
  }
}

TEST_CASE("property: a + b - b == a and text round-trip") {
  Rng rng = MakeRng(20260101);
  for (int trial = 0; trial < 2000; ++trial) {
    const Rational a(UniformInt(rng, -1'000'000, 1'000'000),
                     UniformInt(rng, 1, 1'000'000));
    const Rational b(UniformInt(rng, -1'000'000, 1'000'000),
                     UniformInt(rng, 1, 1'000'000));
    CHECK(a + b - b == a);
    CHECK(Rational::Parse(a.ToString()) == a);
    CHECK((a.Sign() == 0) == a.IsZero());
  }
}

}  // namespace
}  // namespace zerosum
