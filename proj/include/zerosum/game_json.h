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

#ifndef ZEROSUM_GAME_JSON_H_
#define ZEROSUM_GAME_JSON_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "zerosum/game.h"
#include "zerosum/rational.h"

// Game file format:
//
//   {"rows": 2, "cols": 2,
//    "u1": [[1, -1], [-1, 1]],
//    "u2": [["-1/1", "1/1"], ["1/1", "-1/1"]]}
//
// Entries are JSON integers or "n/d" strings with d > 0. The declared rows and
// cols must match both matrices exactly. All rationals written by this
// library are "n/d" strings, so no float ever appears in a file we produce.

namespace zerosum {

using Json = nlohmann::ordered_json;

Json ToJson(const Rational& r);
// Accepts a JSON integer or an "n/d" string. Throws Error(kParseError).
Rational RationalFromJson(const Json& j);

Json ToJson(const PayoffMatrix& m);
Json ToJson(const MixedStrategy& s);
Json ToJson(const BimatrixGame& g);

// Throws Error(kParseError) on malformed JSON or a non-canonical shape.
BimatrixGame GameFromJson(const Json& j);
BimatrixGame ParseGame(std::string_view text);
std::string SerializeGame(const BimatrixGame& g);

BimatrixGame ReadGameFile(const std::string& path);
void WriteGameFile(const std::string& path, const BimatrixGame& g);

}  // namespace zerosum

#endif  // ZEROSUM_GAME_JSON_H_
