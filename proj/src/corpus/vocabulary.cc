// src/corpus/vocabulary.cc

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

#include "cstk/corpus/vocabulary.h"

#include <algorithm>

#include "cstk/base/error.h"
#include "cstk/base/utf8.h"

namespace cstk {

Vocabulary::Vocabulary() : symbols_{kBlank} {}

Vocabulary Vocabulary::FromSymbols(std::vector<char32_t> symbols) {
  std::erase(symbols, kBlank);
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  Vocabulary vocab;
  vocab.symbols_.insert(vocab.symbols_.end(), symbols.begin(), symbols.end());
  return vocab;
}

Vocabulary Vocabulary::FromListing(const std::vector<std::string> &listing) {
  if (listing.empty() || listing.front() != kBlankToken) {
    throw Error(ErrorKind::kInvalidVocabulary,
                "first entry must be " + std::string(kBlankToken));
  }
  Vocabulary vocab;
  for (std::size_t i = 1; i < listing.size(); ++i) {
    const std::u32string cps = DecodeUtf8(listing[i]);
    if (cps.size() != 1) {
      throw Error(ErrorKind::kInvalidVocabulary,
                  "entry " + std::to_string(i) + " is not a single character: '" +
                      listing[i] + "'");
    }
    if (vocab.symbols_.size() > 1 && cps[0] <= vocab.symbols_.back()) {
      throw Error(ErrorKind::kInvalidVocabulary,
                  "entry " + std::to_string(i) +
                      " breaks the code-point order or repeats a symbol");
    }
    vocab.symbols_.push_back(cps[0]);
  }
  return vocab;
}

Vocabulary Vocabulary::FromBlob(std::string_view blob) {
  std::vector<std::string> listing;
  std::size_t start = 0;
  while (true) {
    const std::size_t nl = blob.find('\n', start);
    if (nl == std::string_view::npos) {
      listing.emplace_back(blob.substr(start));
      break;
    }
    listing.emplace_back(blob.substr(start, nl - start));
    start = nl + 1;
  }
  return FromListing(listing);
}

std::optional<int> Vocabulary::IndexOf(char32_t symbol) const {
  auto it = std::lower_bound(symbols_.begin() + 1, symbols_.end(), symbol);
  if (it == symbols_.end() || *it != symbol) return std::nullopt;
  return static_cast<int>(it - symbols_.begin());
}

std::vector<std::string> Vocabulary::Listing() const {
  std::vector<std::string> out;
  out.reserve(symbols_.size());
  out.emplace_back(kBlankToken);
  for (std::size_t i = 1; i < symbols_.size(); ++i)
    out.push_back(EncodeUtf8(symbols_[i]));
  return out;
}

std::string Vocabulary::Blob() const { return JoinStrings(Listing(), "\n"); }

Vocabulary BuildVocab(const std::vector<std::vector<std::string>> &corpora) {
  std::vector<char32_t> chars;
  for (const auto &corpus : corpora) {
    for (const std::string &line : corpus) {
      for (char32_t cp : DecodeUtf8(line)) {
        if (cp != U'\n' && cp != U'\r') chars.push_back(cp);
      }
    }
  }
  if (chars.empty()) throw Error(ErrorKind::kEmptyCorpus, "no characters found");
  return Vocabulary::FromSymbols(std::move(chars));
}

std::vector<int> EncodeTranscript(std::string_view text, const Vocabulary &vocab) {
  const std::u32string cps = DecodeUtf8(text);
  std::vector<int> ids;
  ids.reserve(cps.size());
  std::string missing;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (std::optional<int> id = vocab.IndexOf(cps[i])) {
      ids.push_back(*id);
    } else {
      if (!missing.empty()) missing += ", ";
      missing += "'" + EncodeUtf8(cps[i]) + "' at " + std::to_string(i);
    }
  }
  if (!missing.empty()) throw Error(ErrorKind::kOutOfVocabulary, missing);
  return ids;
}

std::string DecodeLabels(const std::vector<int> &labels, const Vocabulary &vocab) {
  std::u32string out;
  out.reserve(labels.size());
  for (int id : labels) {
    if (id == vocab.blank_index()) continue;
    out.push_back(vocab.symbol(id));
  }
  return EncodeUtf8(out);
}

}  // namespace cstk
