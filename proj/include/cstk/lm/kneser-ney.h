// include/cstk/lm/kneser-ney.h

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

#ifndef CSTK_LM_KNESER_NEY_H_
#define CSTK_LM_KNESER_NEY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cstk/lm/ngram-model.h"

namespace cstk {

using CountTable = std::map<std::vector<WordId>, std::uint64_t>;

struct NGramCounts {
  int order = 0;
  WordTable words;
  // raw[k - 1]: occurrence counts of k-grams over <s>-/</s>-padded sentences.
  std::vector<CountTable> raw;
  // continuation[k - 1], k < order: number of distinct words seen immediately
  // before each k-gram.
  std::vector<CountTable> continuation;
  std::uint64_t sentences = 0;
};

/// Counts every k-gram (k <= order) of each whitespace-tokenized sentence
/// padded as "<s> w1 .. wn </s>". Empty lines are skipped; throws EmptyCorpus
/// when nothing is left, InvalidConfig when order < 1.
NGramCounts CountNGrams(const std::vector<std::string> &sentences, int order);

struct KNConfig {
  int order = 4;
  // When unset, each order uses D = n1 / (n1 + 2 n2) over its count-of-counts,
  // or kFallbackDiscount when n1 or n2 is zero.
  std::optional<double> fixed_discount;
  // Highest-order n-grams seen fewer times are left out of the model; their
  // contexts back off to the next order.
  std::uint64_t min_count = 1;
};

inline constexpr double kFallbackDiscount = 0.75;

/// Per-order discounts that EstimateKneserNey would use.
std::vector<double> KneserNeyDiscounts(const NGramCounts &counts, const KNConfig &config);

/// Interpolated Kneser-Ney with one absolute discount per order. Lower orders
/// use continuation counts (raw counts for n-grams starting with <s>); the
/// unigram level interpolates with a uniform distribution over every
/// predictable word including <unk>, which is how <unk> gets its mass. When
/// the corpus has a single word type the model is still built, the unigram
/// level falls back to uniform and a DegenerateCounts warning is attached.
/// The model order is counts.order; config.order is only read by
/// TrainKneserNey. Throws InvalidConfig for a discount outside (0, 1) or a
/// zero min_count.
NGramModel EstimateKneserNey(const NGramCounts &counts, const KNConfig &config = {});

// Convenience: CountNGrams then EstimateKneserNey with config.order.
NGramModel TrainKneserNey(const std::vector<std::string> &sentences, const KNConfig &config = {});

}  // namespace cstk

#endif  // CSTK_LM_KNESER_NEY_H_
