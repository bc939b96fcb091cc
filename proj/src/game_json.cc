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

#include "zerosum/game_json.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "zerosum/error.h"

namespace zerosum {

namespace {

[[noreturn]] void Fail(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

int ReadDimension(const Json& j, const char* key) {
  if (!j.contains(key)) Fail(std::string("missing field '") + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
    Fail(std::string("field '") + key + "' must be a positive integer");
  }
  return static_cast<int>(v.get<std::int64_t>());
}

PayoffMatrix ReadMatrix(const Json& j, const char* key, int rows, int cols) {
  if (!j.contains(key)) Fail(std::string("missing field '") + key + "'");
  const Json& m = j.at(key);
  if (!m.is_array() || static_cast<int>(m.size()) != rows) {
    Fail(std::string("'") + key + "' must be an array of " +
         std::to_string(rows) + " rows");
  }
  std::vector<Rational> flat;
  flat.reserve(static_cast<std::size_t>(rows) * cols);
  for (const Json& row : m) {
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      Fail(std::string("every row of '") + key + "' must have " +
           std::to_string(cols) + " entries");
    }
    for (const Json& e : row) flat.push_back(RationalFromJson(e));
  }
  return PayoffMatrix(rows, cols, std::move(flat));
}

}  // namespace

Json ToJson(const Rational& r) { return r.ToString(); }

Rational RationalFromJson(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned()
               ? Rational::Parse(std::to_string(j.get<std::uint64_t>()), true)
               : Rational(j.get<std::int64_t>());
  }
  if (j.is_string()) return Rational::Parse(j.get<std::string>());
  Fail("payoff entry must be an integer or an \"n/d\" string, got " + j.dump());
}

Json ToJson(const PayoffMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(ToJson(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json ToJson(const MixedStrategy& s) {
  Json out = Json::array();
  for (const Rational& p : s.probs()) out.push_back(ToJson(p));
  return out;
}

Json ToJson(const BimatrixGame& g) {
  Json j;
  j["rows"] = g.rows();
  j["cols"] = g.cols();
  j["u1"] = ToJson(g.u1());
  j["u2"] = ToJson(g.u2());
  return j;
}

BimatrixGame GameFromJson(const Json& j) {
  if (!j.is_object()) Fail("game must be a JSON object");
  const int rows = ReadDimension(j, "rows");
  const int cols = ReadDimension(j, "cols");
  PayoffMatrix u1 = ReadMatrix(j, "u1", rows, cols);
  PayoffMatrix u2 = ReadMatrix(j, "u2", rows, cols);
  return BimatrixGame(std::move(u1), std::move(u2));
}

BimatrixGame ParseGame(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    Fail(std::string("invalid JSON: ") + e.what());
  }
  return GameFromJson(j);
}

std::string SerializeGame(const BimatrixGame& g) { return ToJson(g).dump(); }

BimatrixGame ReadGameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseGame(buf.str());
}

void WriteGameFile(const std::string& path, const BimatrixGame& g) {
  std::ofstream out(path);
  if (!out) Fail("cannot write '" + path + "'");
  out << ToJson(g).dump(2) << "\n";
}

}  // namespace zerosum
