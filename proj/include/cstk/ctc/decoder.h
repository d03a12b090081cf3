// include/cstk/ctc/decoder.h

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

#ifndef CSTK_CTC_DECODER_H_
#define CSTK_CTC_DECODER_H_

#include <limits>
#include <string>
#include <vector>

#include "cstk/base/matrix.h"
#include "cstk/corpus/vocabulary.h"
#include "cstk/lm/ngram-model.h"

namespace cstk {

/// Per-frame argmax ids (lowest id on ties).
std::vector<int> BestPath(const Matrix &logprobs);

/// Collapses repeats and drops blanks.
std::vector<int> CollapsePath(const std::vector<int> &path);

/// Best path, collapsed, mapped to characters. Throws ShapeMismatch when the
/// frame width differs from the vocabulary size.
std::string GreedyDecode(const Matrix &logprobs, const Vocabulary &vocab);

struct DecoderConfig {
  int beam_width = 100;
  // Tokens below this natural-log probability are not expanded, except the
  // frame's best token.
  double token_min_logp = -5.0;
  double lm_weight = 0.5;   // alpha
  double word_bonus = 1.5;  // beta
  int n_best = 1;
  // Adds alpha * ln P(</s> | words) at the end of the utterance.
  bool score_end_of_sentence = false;
};

/// Throws InvalidConfig unless beam_width >= 1 and 1 <= n_best <= beam_width.
void ValidateDecoderConfig(const DecoderConfig &config);

struct Hypothesis {
  std::string text;
  std::vector<int> labels;
  double acoustic_logp = 0.0;  // ln of the summed probability of the prefix's alignments
  double lm_logp = 0.0;        // natural-log LM score of the completed words
  int word_count = 0;          // words scored by the LM
  double combined_score = 0.0;
};

/// CTC prefix beam search with optional word-level shallow fusion.
///
/// The beam holds (prefix, ending) entries, where the ending says whether the
/// prefix's alignments end in a blank or in its last label; an entry's score is
/// its acoustic log-probability plus alpha * lm + beta * words of its prefix.
/// Each frame every entry is extended by every token that passes
/// token_min_logp, merged by entry, and the best beam_width entries are kept
/// (ties go to the lexicographically smaller prefix). A word is scored when a
/// space follows a non-empty run of characters and once more for the trailing
/// partial word at the end. The result is the n_best prefixes sorted by
/// combined score. Without an LM alpha and beta are taken to be zero.
/// Throws ShapeMismatch or NoSpaceSymbol (LM given and no space in vocab).
std::vector<Hypothesis> PrefixBeamSearch(const Matrix &logprobs, const Vocabulary &vocab,
                                         const DecoderConfig &config,
                                         const NGramModel *lm = nullptr);

}  // namespace cstk

#endif  // CSTK_CTC_DECODER_H_
