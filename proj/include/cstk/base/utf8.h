// include/cstk/base/utf8.h

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

#ifndef CSTK_BASE_UTF8_H_
#define CSTK_BASE_UTF8_H_

#include <string>
#include <string_view>
#include <vector>

namespace cstk {

// Invalid byte sequences decode to U+FFFD, one replacement per bad byte.
std::u32string DecodeUtf8(std::string_view bytes);

std::string EncodeUtf8(std::u32string_view text);
std::string EncodeUtf8(char32_t cp);

// Splits on runs of ASCII whitespace; no empty tokens.
std::vector<std::string> SplitWhitespace(std::string_view text);

std::string JoinStrings(const std::vector<std::string> &parts,
                        std::string_view sep);

}  // namespace cstk

#endif  // CSTK_BASE_UTF8_H_
