// src/corpus/text-normalize.cc

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

#include "cstk/corpus/text-normalize.h"

#include "cstk/base/utf8.h"
#include "cstk/corpus/unicode-tables.h"

namespace cstk {

namespace {
constexpr char32_t kTatweel = 0x0640;
}  // namespace

bool IsArabicDiacritic(char32_t cp) {
  return (cp >= 0x064B && cp <= 0x0652) || cp == 0x0670;
}

bool ContainsDigit(std::u32string_view text) {
  for (char32_t cp : text) {
    if ((cp >= U'0' && cp <= U'9') || (cp >= 0x0660 && cp <= 0x0669) ||
        (cp >= 0x06F0 && cp <= 0x06F9))
      return true;
  }
  return false;
}

std::optional<std::string> NormalizeText(std::string_view raw,
                                         const NormalizeOptions &options) {
  const std::u32string text = DecodeUtf8(raw);
  if (options.drop_numeric && ContainsDigit(text)) return std::nullopt;

  std::u32string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char32_t cp : text) {
    if (unicode::IsSpace(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (IsArabicDiacritic(cp) || cp == kTatweel || unicode::IsRemovable(cp))
      continue;
    if (options.lowercase_latin) cp = unicode::ToLowerLatin(cp);
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(cp);
  }
  return EncodeUtf8(out);
}

}  // namespace cstk
