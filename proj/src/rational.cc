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

#include "zerosum/rational.h"

#include <cctype>
#include <string>
#include <utility>

#include "zerosum/error.h"

namespace zerosum {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kEmptyGame: return "EmptyGame";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kWeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::kInvalidStrategy: return "InvalidStrategy";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kAlphaNonpositive: return "AlphaNonpositive";
    case ErrorCode::kNotZeroSum: return "NotZeroSum";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kBadSpec: return "BadSpec";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  // mpq_class has no int64 constructor on every platform; go through mpz.
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(value));
  value_ = mpq_class(z);
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  mpz_class n, d;
  mpz_set_si(n.get_mpz_t(), static_cast<long>(num));
  mpz_set_si(d.get_mpz_t(), static_cast<long>(den));
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) {
    throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text, bool allow_integer) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text =
      slash == std::string_view::npos ? std::string_view() : body.substr(slash + 1);
  if (!IsDigits(num_text) ||
      (slash == std::string_view::npos ? !allow_integer : !IsDigits(den_text))) {
    throw Error(ErrorCode::kParseError,
                "malformed rational '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_text), 10);
  mpz_class den = slash == std::string_view::npos
                      ? mpz_class(1)
                      : mpz_class(std::string(den_text), 10);
  if (den == 0) {
    throw Error(ErrorCode::kParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rational(mpq_class(num, den));
}

std::string Rational::ToString() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::Numerator() const { return value_.get_num().get_str(); }
std::string Rational::Denominator() const { return value_.get_den().get_str(); }
bool Rational::IsInteger() const { return value_.get_den() == 1; }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.IsZero()) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

Rational Abs(const Rational& r) { return r.Sign() < 0 ? -r : r; }

}  // namespace zerosum
