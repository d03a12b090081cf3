// include/cstk/metrics/error-rates.h

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

#ifndef CSTK_METRICS_ERROR_RATES_H_
#define CSTK_METRICS_ERROR_RATES_H_

#include <string>
#include <string_view>
#include <vector>

#include "cstk/metrics/edit-distance.h"

namespace cstk {

struct ScoringOptions {
  // Strip language tags and apply NormalizeText (digits kept) to both sides.
  bool normalize = true;
  // Character error rate ignores spaces.
  bool cer_ignore_spaces = true;
};

/// Text as the metrics see it.
std::string ScoringText(std::string_view text, const ScoringOptions &options = {});

std::vector<std::string> WordTokens(std::string_view text, const ScoringOptions &options = {});
std::u32string CharTokens(std::string_view text, const ScoringOptions &options = {});

struct ErrorRate {
  AlignmentCounts counts;  // pooled over the corpus
  double percent = 0.0;    // 100 * distance / reference length
};

/// Pooled word and character error rates. Throws ShapeMismatch when the lists
/// differ in length and EmptyReferenceCorpus when the references hold no
/// token.
ErrorRate WordErrorRate(const std::vector<std::string> &refs,
                        const std::vector<std::string> &hyps, const ScoringOptions &options = {});
ErrorRate CharErrorRate(const std::vector<std::string> &refs,
                        const std::vector<std::string> &hyps, const ScoringOptions &options = {});

/// Percentage of pairs whose scoring texts differ. Throws EmptyCorpus for no
/// pairs and ShapeMismatch for unequal lists.
double SentenceErrorRate(const std::vector<std::string> &refs,
                         const std::vector<std::string> &hyps, const ScoringOptions &options = {});

}  // namespace cstk

#endif  // CSTK_METRICS_ERROR_RATES_H_
