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

#include "zerosum/sampling.h"

#include <vector>

namespace zerosum {

Rng MakeRng(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
  std::vector<std::uint32_t> words;
  auto push = [&words](std::uint64_t v) {
    words.push_back(static_cast<std::uint32_t>(v));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  };
  push(seed);
  for (std::uint64_t t : tags) push(t);
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

std::int64_t UniformInt(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

MixedStrategy RandomMixedStrategy(Rng& rng, int num_actions, int bound) {
  std::vector<std::int64_t> weights(num_actions);
  std::int64_t total = 0;
  while (total == 0) {
    total = 0;
    for (auto& w : weights) {
      w = UniformInt(rng, 0, bound);
      total += w;
    }
  }
  std::vector<Rational> probs;
  probs.reserve(num_actions);
  for (std::int64_t w : weights) probs.emplace_back(w, total);
  return MixedStrategy(std::move(probs));
}

MixedProfile RandomMixedProfile(Rng& rng, const BimatrixGame& g, int bound) {
  MixedStrategy row = RandomMixedStrategy(rng, g.rows(), bound);
  MixedStrategy col = RandomMixedStrategy(rng, g.cols(), bound);
  return {std::move(row), std::move(col)};
}

MixedProfile RandomPureProfile(Rng& rng, const BimatrixGame& g) {
  const int r = static_cast<int>(UniformInt(rng, 0, g.rows() - 1));
  const int c = static_cast<int>(UniformInt(rng, 0, g.cols() - 1));
  return MixedProfile::Pure(g, {r, c});
}

Rational RandomWeight(Rng& rng) {
  return Rational(UniformInt(rng, 0, kWeightDenominator), kWeightDenominator);
}

Rational RandomOpenWeight(Rng& rng) {
  return Rational(UniformInt(rng, 1, kWeightDenominator - 1),
                  kWeightDenominator);
}

}  // namespace zerosum
