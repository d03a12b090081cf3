// src/lm/ngram-model.cc

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

#include "cstk/lm/ngram-model.h"

#include <cmath>

#include "cstk/base/error.h"
#include "cstk/base/utf8.h"

namespace cstk {

WordTable::WordTable() {
  Intern(kUnkToken);
  Intern(kBosToken);
  Intern(kEosToken);
}

WordId WordTable::Intern(std::string_view word) {
  auto it = index_.find(std::string(word));
  if (it != index_.end()) return it->second;
  const auto id = static_cast<WordId>(words_.size());
  words_.emplace_back(word);
  index_.emplace(std::string(word), id);
  return id;
}

WordId WordTable::Find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  return it == index_.end() ? kUnk : it->second;
}

bool WordTable::Contains(std::string_view word) const {
  return index_.count(std::string(word)) > 0;
}

NGramModel::NGramModel(int order, WordTable words, std::vector<Table> tables,
                       std::vector<std::string> warnings)
    : order_(order),
      words_(std::move(words)),
      tables_(std::move(tables)),
      warnings_(std::move(warnings)) {
  if (order_ < 1 || static_cast<int>(tables_.size()) != order_)
    throw Error(ErrorKind::kInvalidConfig, "table count does not match the model order");
  if (tables_[0].find({WordTable::kUnk}) == tables_[0].end())
    throw Error(ErrorKind::kArpaSyntax, "model has no <unk> unigram");
}

const NGramEntry *NGramModel::Find(std::span<const WordId> ngram) const {
  if (ngram.empty() || ngram.size() > tables_.size()) return nullptr;
  const Table &table = tables_[ngram.size() - 1];
  auto it = table.find(std::vector<WordId>(ngram.begin(), ngram.end()));
  return it == table.end() ? nullptr : &it->second;
}

double NGramModel::ScoreLog10(WordId word, std::span<const WordId> context) const {
  const auto max_context = static_cast<std::size_t>(order_ - 1);
  if (context.size() > max_context) context = context.subspan(context.size() - max_context);
  std::vector<WordId> key(context.begin(), context.end());
  key.push_back(word);
  double backoff = 0.0;
  for (std::size_t len = context.size();; --len) {
    // key holds the last `len` context words followed by `word`.
    auto it = tables_[len].find(key);
    if (it != tables_[len].end()) return backoff + it->second.log10_prob;
    if (len == 0) break;
    const NGramEntry *ctx = Find(std::span<const WordId>(key.data(), len));
    if (ctx != nullptr) backoff += ctx->log10_backoff;
    key.erase(key.begin());
  }
  // Unseen unigram: fall back to <unk>.
  return backoff + tables_[0].at({WordTable::kUnk}).log10_prob;
}

double NGramModel::ScoreWord(std::string_view word,
                             const std::vector<std::string> &context) const {
  std::vector<WordId> ids;
  ids.reserve(context.size());
  for (const std::string &w : context) ids.push_back(words_.Find(w));
  return ScoreLog10(words_.Find(word), ids) * kLn10;
}

double NGramModel::ScoreSentence(const std::vector<std::string> &words) const {
  std::vector<WordId> history = {WordTable::kBos};
  double total = 0.0;
  for (const std::string &w : words) {
    const WordId id = words_.Find(w);
    total += ScoreLog10(id, history);
    history.push_back(id);
  }
  total += ScoreLog10(WordTable::kEos, history);
  return total * kLn10;
}

std::vector<WordId> NGramModel::PredictableWords() const {
  std::vector<WordId> out;
  for (const auto &[ngram, entry] : tables_[0]) {
    if (ngram[0] != WordTable::kBos) out.push_back(ngram[0]);
  }
  return out;
}

double Perplexity(const NGramModel &model, const std::vector<std::string> &sentences) {
  double total = 0.0;
  std::size_t tokens = 0;
  for (const std::string &line : sentences) {
    const std::vector<std::string> words = SplitWhitespace(line);
    if (words.empty()) continue;
    total += model.ScoreSentence(words);
    tokens += words.size() + 1;
  }
  if (tokens == 0) throw Error(ErrorKind::kEmptyCorpus, "no sentences to score");
  return std::exp(-total / static_cast<double>(tokens));
}

}  // namespace cstk
