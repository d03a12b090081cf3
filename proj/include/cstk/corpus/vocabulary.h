// include/cstk/corpus/vocabulary.h

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

#ifndef CSTK_CORPUS_VOCABULARY_H_
#define CSTK_CORPUS_VOCABULARY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cstk {

/// Ordered character set for CTC outputs. Index 0 is always the blank, a
/// sentinel outside the Unicode range; the remaining symbols are unique and
/// sorted by code point.
class Vocabulary {
 public:
  static constexpr char32_t kBlank = 0x110000;
  static constexpr std::string_view kBlankToken = "<blank>";

  // Blank only.
  Vocabulary();

  // Sorts and de-duplicates `symbols`; a blank among them is ignored.
  static Vocabulary FromSymbols(std::vector<char32_t> symbols);

  // One entry per symbol: "<blank>" first, then single UTF-8 characters in
  // code-point order. Throws InvalidVocabulary otherwise.
  static Vocabulary FromListing(const std::vector<std::string> &listing);

  // Entries joined by '\n'.
  static Vocabulary FromBlob(std::string_view blob);

  std::size_t size() const { return symbols_.size(); }
  int blank_index() const { return 0; }
  std::optional<int> space_index() const { return IndexOf(U' '); }

  char32_t symbol(int index) const { return symbols_.at(index); }
  const std::vector<char32_t> &symbols() const { return symbols_; }

  std::optional<int> IndexOf(char32_t symbol) const;

  std::vector<std::string> Listing() const;
  std::string Blob() const;

  friend bool operator==(const Vocabulary &, const Vocabulary &) = default;

 private:
  std::vector<char32_t> symbols_;
};

/// Blank plus every distinct character of every line of every corpus. Throws
/// EmptyCorpus when no character is found.
Vocabulary BuildVocab(const std::vector<std::vector<std::string>> &corpora);

/// One id per character; throws OutOfVocabulary listing each unknown character
/// with its character position.
std::vector<int> EncodeTranscript(std::string_view text, const Vocabulary &vocab);

/// Maps ids back to characters; blanks are skipped.
std::string DecodeLabels(const std::vector<int> &labels, const Vocabulary &vocab);

}  // namespace cstk

#endif  // CSTK_CORPUS_VOCABULARY_H_
