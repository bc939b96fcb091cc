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

#ifndef ZEROSUM_SAMPLING_H_
#define ZEROSUM_SAMPLING_H_

#include <cstdint>
#include <initializer_list>
#include <random>

#include "zerosum/game.h"
#include "zerosum/rational.h"

namespace zerosum {

using Rng = std::mt19937_64;

inline constexpr int kDefaultWeightBound = 64;
inline constexpr int kWeightDenominator = 64;

// Seeds a generator from a base seed plus stream tags, so independent
// consumers of one user seed do not share a stream.
Rng MakeRng(std::uint64_t seed, std::initializer_list<std::uint64_t> tags = {});

// Uniform integer in [lo, hi].
std::int64_t UniformInt(Rng& rng, std::int64_t lo, std::int64_t hi);

// Integer weights drawn from [0, bound] and normalized; the all-zero draw is
// rejected.
MixedStrategy RandomMixedStrategy(Rng& rng, int num_actions,
                                  int bound = kDefaultWeightBound);
MixedProfile RandomMixedProfile(Rng& rng, const BimatrixGame& g,
                                int bound = kDefaultWeightBound);
MixedProfile RandomPureProfile(Rng& rng, const BimatrixGame& g);

// k/64 with k uniform in [0, 64].
Rational RandomWeight(Rng& rng);
// k/64 with k uniform in [1, 63].
Rational RandomOpenWeight(Rng& rng);

}  // namespace zerosum

#endif  // ZEROSUM_SAMPLING_H_
