// include/cstk/corpus/text-normalize.h

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

#ifndef CSTK_CORPUS_TEXT_NORMALIZE_H_
#define CSTK_CORPUS_TEXT_NORMALIZE_H_

#include <optional>
#include <string>
#include <string_view>

namespace cstk {

struct NormalizeOptions {
  // Sentences with any ASCII, Arabic-Indic or Extended Arabic-Indic digit are
  // dropped whole. Scoring turns this off so that no pair goes missing.
  bool drop_numeric = true;
  bool lowercase_latin = true;
};

/// Cleans one sentence: strips Arabic diacritics (U+064B..U+0652, U+0670),
/// tatweel, punctuation, symbols and control characters, lowercases Latin
/// letters and collapses whitespace. Returns std::nullopt (the sentence is
/// dropped) when drop_numeric is set and the input contains a digit.
std::optional<std::string> NormalizeText(std::string_view raw,
                                         const NormalizeOptions &options = {});

bool ContainsDigit(std::u32string_view text);

bool IsArabicDiacritic(char32_t cp);

}  // namespace cstk

#endif  // CSTK_CORPUS_TEXT_NORMALIZE_H_
