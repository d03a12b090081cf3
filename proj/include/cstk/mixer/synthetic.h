// include/cstk/mixer/synthetic.h

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

#ifndef CSTK_MIXER_SYNTHETIC_H_
#define CSTK_MIXER_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include "cstk/corpus/posteriorgram.h"
#include "cstk/corpus/vocabulary.h"

namespace cstk {

/// Two artificial languages: A writes a..e and B writes f..j. Each source
/// model knows only its own alphabet (its vocabulary is blank plus those five
/// letters). On a frame of its own alphabet or a blank frame it puts
/// `accuracy` on the truth and spreads the rest evenly; on a frame of the
/// other alphabet it is uniform.
struct SyntheticConfig {
  int min_symbols = 5;
  int max_symbols = 15;
  int min_frames_per_symbol = 1;
  int max_frames_per_symbol = 3;
  double accuracy = 0.9;
  double switch_probability = 0.3;  // chance the next symbol changes language
  double frame_rate_hz = 50.0;
};

struct SyntheticUtterance {
  std::string text;                  // e.g. "abhjc"
  std::vector<Posteriorgram> sources;  // language A, then language B
};

Vocabulary SyntheticSourceVocab(int language);
Vocabulary SyntheticUnionVocab();

/// `count` utterances from a seeded mt19937_64. Every symbol is emitted for
/// a random number of frames and followed by one blank frame; the utterance
/// starts with a blank frame.
std::vector<SyntheticUtterance> GenerateSynthetic(std::size_t count, std::uint64_t seed,
                                                  const SyntheticConfig &config = {});

}  // namespace cstk

#endif  // CSTK_MIXER_SYNTHETIC_H_
