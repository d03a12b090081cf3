// tests/oracles/random-text.h

// Copyright 2026  The cstk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CSTK_TESTS_ORACLES_RANDOM_TEXT_H_
#define CSTK_TESTS_ORACLES_RANDOM_TEXT_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

// Sentences over words "w0".."w{vocab-1}" with a skewed word distribution and
// lengths in [1, max_len].
inline std::vector<std::string> RandomSentences(std::size_t count, int vocab, int max_len,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> weights;
  for (int i = 0; i < vocab; ++i) weights.push_back(1.0 / (i + 1));
  std::discrete_distribution<int> word(weights.begin(), weights.end());
  std::uniform_int_distribution<int> length(1, max_len);
  std::vector<std::string> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::string line;
    const int n = length(rng);
    for (int i = 0; i < n; ++i) {
      if (i > 0) line += ' ';
      line += "w" + std::to_string(word(rng));
    }
    out.push_back(line);
  }
  return out;
}

}  // namespace oracle

#endif  // CSTK_TESTS_ORACLES_RANDOM_TEXT_H_
