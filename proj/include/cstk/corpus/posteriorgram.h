// include/cstk/corpus/posteriorgram.h

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

#ifndef CSTK_CORPUS_POSTERIORGRAM_H_
#define CSTK_CORPUS_POSTERIORGRAM_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "cstk/base/matrix.h"
#include "cstk/corpus/vocabulary.h"

namespace cstk {

/// Per-frame natural-log probabilities over a vocabulary (T x V).
struct Posteriorgram {
  Vocabulary vocab;
  Matrix frames;
  double frame_rate_hz = 50.0;

  std::size_t num_frames() const { return frames.rows(); }
};

// Throws InvalidPosteriorgram unless V matches the vocabulary, the frame rate
// is positive and every row's logsumexp is within `tolerance` of 0.
void ValidatePosteriorgram(const Posteriorgram &pgram, double tolerance = 1e-4);

// Binary layout (little-endian):
//   "PGRM" | u16 version=1 | u32 V | u32 T | f32 frame_rate_hz |
//   u32 vocab_blob_len | vocab blob (symbols joined by '\n', blank as
//   "<blank>") | T*V f32 log-probs, frame-major.
inline constexpr std::string_view kPosteriorgramMagic = "PGRM";
inline constexpr std::uint16_t kPosteriorgramVersion = 1;

// Validates first.
std::string WritePosteriorgram(const Posteriorgram &pgram);

// Throws BadMagic, TruncatedFile, or VocabMismatch when `expected` is given
// and differs from the stored vocabulary.
Posteriorgram ReadPosteriorgram(std::string_view bytes,
                                const Vocabulary *expected = nullptr);

void SavePosteriorgram(const std::filesystem::path &path, const Posteriorgram &pgram);
Posteriorgram LoadPosteriorgram(const std::filesystem::path &path,
                                const Vocabulary *expected = nullptr);

}  // namespace cstk

#endif  // CSTK_CORPUS_POSTERIORGRAM_H_
