// include/cstk/corpus/tags.h

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

#ifndef CSTK_CORPUS_TAGS_H_
#define CSTK_CORPUS_TAGS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cstk {

struct Utterance;

enum class Language { kTunisian = 0, kFrench = 1, kEnglish = 2 };

constexpr std::size_t kNumLanguages = 3;

// "tn", "fr", "en".
std::string_view LanguageCode(Language lang);

struct TaggedSpan {
  Language lang = Language::kTunisian;
  std::string text;

  friend bool operator==(const TaggedSpan &, const TaggedSpan &) = default;
};

/// Splits a transcript annotated with flat <fr>..</fr> / <en>..</en> spans.
/// Untagged stretches become Tunisian spans; empty untagged stretches are
/// omitted. Throws MalformedTag (with the byte offset) on unclosed, crossed,
/// nested or stray closing tags.
std::vector<TaggedSpan> ParseTags(std::string_view tagged);

/// Inverse of ParseTags.
std::string RenderTags(const std::vector<TaggedSpan> &spans);

/// Concatenated span text with all markup removed.
std::string StripTags(std::string_view tagged);

struct LanguageStats {
  std::array<std::uint64_t, kNumLanguages> words{};
  std::uint64_t total_words = 0;

  double percent(Language lang) const;
};

/// Word shares per language over whitespace-delimited words of every span.
/// Throws EmptyCorpus when there are no words at all.
LanguageStats ComputeLanguageStats(const std::vector<Utterance> &manifest);
LanguageStats ComputeLanguageStats(const std::vector<std::string> &transcripts);

struct CorpusStats {
  std::uint64_t word_count = 0;
  std::uint64_t unique_word_count = 0;
};

CorpusStats ComputeCorpusStats(const std::vector<std::string> &lines);

}  // namespace cstk

#endif  // CSTK_CORPUS_TAGS_H_
