// include/cstk/mixer/union-vocab.h

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

#ifndef CSTK_MIXER_UNION_VOCAB_H_
#define CSTK_MIXER_UNION_VOCAB_H_

#include <optional>
#include <vector>

#include "cstk/base/matrix.h"
#include "cstk/corpus/posteriorgram.h"
#include "cstk/corpus/vocabulary.h"

namespace cstk {

struct UnionVocabMap {
  Vocabulary union_vocab;
  // to_union[i][j]: union index of symbol j of source i. Blank maps to blank.
  std::vector<std::vector<int>> to_union;
};

/// Blank plus the code-point-sorted union of every source's symbols.
UnionVocabMap BuildUnion(const std::vector<Vocabulary> &sources);

enum class FeatureDomain { kProbability, kLogProbability };

/// Concatenates the sources frame by frame (exponentiated in the probability
/// domain), then `encoder` when given. F = sum of V_i (+ D). Throws
/// FrameCountMismatch when the frame counts differ and InvalidConfig when the
/// frame rates differ.
Matrix AssembleFeatures(const std::vector<Posteriorgram> &sources,
                        const Matrix *encoder = nullptr,
                        FeatureDomain domain = FeatureDomain::kProbability);

}  // namespace cstk

#endif  // CSTK_MIXER_UNION_VOCAB_H_
