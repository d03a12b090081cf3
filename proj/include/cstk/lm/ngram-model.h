// include/cstk/lm/ngram-model.h

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

#ifndef CSTK_LM_NGRAM_MODEL_H_
#define CSTK_LM_NGRAM_MODEL_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cstk {

inline constexpr std::string_view kUnkToken = "<unk>";
inline constexpr std::string_view kBosToken = "<s>";
inline constexpr std::string_view kEosToken = "</s>";

using WordId = std::int32_t;

struct WordIdSequenceHash {
  std::size_t operator()(const std::vector<WordId> &ids) const {
    std::uint64_t h = 1469598103934665603ull;
    for (WordId id : ids) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(id));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Interned word strings. Ids 0, 1, 2 are always <unk>, <s>, </s>.
class WordTable {
 public:
  static constexpr WordId kUnk = 0;
  static constexpr WordId kBos = 1;
  static constexpr WordId kEos = 2;

  WordTable();

  WordId Intern(std::string_view word);
  // kUnk for unknown words.
  WordId Find(std::string_view word) const;
  bool Contains(std::string_view word) const;
  const std::string &Word(WordId id) const { return words_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return words_.size(); }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId> index_;
};

struct NGramEntry {
  double log10_prob = 0.0;
  double log10_backoff = 0.0;  // unused at the highest order
};

/// Backoff n-gram model in ARPA form. Immutable once built; any number of
/// threads may score concurrently.
class NGramModel {
 public:
  using Table = std::unordered_map<std::vector<WordId>, NGramEntry, WordIdSequenceHash>;

  NGramModel(int order, WordTable words, std::vector<Table> tables,
             std::vector<std::string> warnings = {});

  int order() const { return order_; }
  const WordTable &words() const { return words_; }
  // tables()[k - 1] holds the k-grams.
  const std::vector<Table> &tables() const { return tables_; }
  const std::vector<std::string> &warnings() const { return warnings_; }

  const NGramEntry *Find(std::span<const WordId> ngram) const;

  /// Backoff score in log10. Only the last order-1 context ids are used.
  double ScoreLog10(WordId word, std::span<const WordId> context) const;

  /// Natural-log P(word | context). Unknown words score as <unk>.
  double ScoreWord(std::string_view word, const std::vector<std::string> &context) const;

  /// Sum of ScoreWord over the words and a final </s>, starting from <s>.
  double ScoreSentence(const std::vector<std::string> &words) const;

  // Words that can be predicted: everything but <s>.
  std::vector<WordId> PredictableWords() const;

 private:
  int order_;
  WordTable words_;
  std::vector<Table> tables_;
  std::vector<std::string> warnings_;
};

/// exp(-total log-prob / tokens) over whitespace-tokenized sentences, where
/// tokens counts every word plus one </s> per sentence (never <s>). Empty
/// lines are skipped.
double Perplexity(const NGramModel &model, const std::vector<std::string> &sentences);

inline constexpr double kLn10 = 2.302585092994045684;

}  // namespace cstk

#endif  // CSTK_LM_NGRAM_MODEL_H_
