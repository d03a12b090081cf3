// src/corpus/tags.cc

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

#include "cstk/corpus/tags.h"

#include <optional>
#include <unordered_set>

#include "cstk/base/error.h"
#include "cstk/base/utf8.h"
#include "cstk/corpus/manifest.h"

namespace cstk {

std::string_view LanguageCode(Language lang) {
  switch (lang) {
    case Language::kTunisian: return "tn";
    case Language::kFrench: return "fr";
    case Language::kEnglish: return "en";
  }
  return "tn";
}

namespace {

struct TagToken {
  Language lang;
  bool closing;
  std::size_t length;
};

std::optional<TagToken> MatchTag(std::string_view s, std::size_t pos) {
  static constexpr std::pair<std::string_view, TagToken> kTags[] = {
      {"<fr>", {Language::kFrench, false, 4}},
      {"</fr>", {Language::kFrench, true, 5}},
      {"<en>", {Language::kEnglish, false, 4}},
      {"</en>", {Language::kEnglish, true, 5}},
  };
  for (const auto &[text, token] : kTags) {
    if (s.compare(pos, text.size(), text) == 0) return token;
  }
  return std::nullopt;
}

std::string At(std::size_t offset) {
  return "at byte offset " + std::to_string(offset);
}

}  // namespace

std::vector<TaggedSpan> ParseTags(std::string_view tagged) {
  std::vector<TaggedSpan> spans;
  bool is_open = false;
  Language open = Language::kTunisian;
  std::size_t open_offset = 0;
  std::string current;
  std::size_t i = 0;
  while (i < tagged.size()) {
    std::optional<TagToken> tag;
    if (tagged[i] == '<') tag = MatchTag(tagged, i);
    if (!tag) {
      current.push_back(tagged[i]);
      ++i;
      continue;
    }
    if (!tag->closing) {
      if (is_open) {
        throw Error(ErrorKind::kMalformedTag,
                    "nested <" + std::string(LanguageCode(tag->lang)) +
                        "> inside <" + std::string(LanguageCode(open)) + "> " +
                        At(i));
      }
      if (!current.empty()) spans.push_back({Language::kTunisian, current});
      current.clear();
      is_open = true;
      open = tag->lang;
      open_offset = i;
    } else {
      if (!is_open) {
        throw Error(ErrorKind::kMalformedTag,
                    "closing </" + std::string(LanguageCode(tag->lang)) +
                        "> without an opening tag " + At(i));
      }
      if (open != tag->lang) {
        throw Error(ErrorKind::kMalformedTag,
                    "crossed tags: </" + std::string(LanguageCode(tag->lang)) +
                        "> closes <" + std::string(LanguageCode(open)) + "> " +
                        At(i));
      }
      spans.push_back({open, current});
      current.clear();
      is_open = false;
    }
    i += tag->length;
  }
  if (is_open) {
    throw Error(ErrorKind::kMalformedTag,
                "unclosed <" + std::string(LanguageCode(open)) + "> " +
                    At(open_offset));
  }
  if (!current.empty()) spans.push_back({Language::kTunisian, current});
  return spans;
}

std::string RenderTags(const std::vector<TaggedSpan> &spans) {
  std::string out;
  for (const TaggedSpan &span : spans) {
    if (span.lang == Language::kTunisian) {
      out += span.text;
    } else {
      const std::string code(LanguageCode(span.lang));
      out += "<" + code + ">" + span.text + "</" + code + ">";
    }
  }
  return out;
}

std::string StripTags(std::string_view tagged) {
  std::string out;
  for (const TaggedSpan &span : ParseTags(tagged)) out += span.text;
  return out;
}

double LanguageStats::percent(Language lang) const {
  if (total_words == 0) return 0.0;
  return 100.0 * static_cast<double>(words[static_cast<std::size_t>(lang)]) /
         static_cast<double>(total_words);
}

LanguageStats ComputeLanguageStats(const std::vector<std::string> &transcripts) {
  LanguageStats stats;
  for (const std::string &text : transcripts) {
    for (const TaggedSpan &span : ParseTags(text)) {
      const auto n = SplitWhitespace(span.text).size();
      stats.words[static_cast<std::size_t>(span.lang)] += n;
      stats.total_words += n;
    }
  }
  if (stats.total_words == 0)
    throw Error(ErrorKind::kEmptyCorpus, "no words in any transcript");
  return stats;
}

LanguageStats ComputeLanguageStats(const std::vector<Utterance> &manifest) {
  std::vector<std::string> texts;
  texts.reserve(manifest.size());
  for (const Utterance &u : manifest) texts.push_back(u.text);
  return ComputeLanguageStats(texts);
}

CorpusStats ComputeCorpusStats(const std::vector<std::string> &lines) {
  CorpusStats stats;
  std::unordered_set<std::string> seen;
  for (const std::string &line : lines) {
    for (std::string &word : SplitWhitespace(line)) {
      ++stats.word_count;
      seen.insert(std::move(word));
    }
  }
  stats.unique_word_count = seen.size();
  return stats;
}

}  // namespace cstk
