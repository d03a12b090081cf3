// include/cstk/corpus/unicode-tables.h

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

#ifndef CSTK_CORPUS_UNICODE_TABLES_H_
#define CSTK_CORPUS_UNICODE_TABLES_H_

#include <cstddef>

namespace cstk {
namespace unicode {

struct CodepointRange {
  char32_t lo;
  char32_t hi;
};

struct CaseMapping {
  char32_t upper;
  char32_t lower;
};

// Sorted, disjoint. Regenerate with tools/gen-unicode-tables.py.
extern const CodepointRange kSpaceRanges[];
extern const std::size_t kSpaceRangesSize;
// General categories P*, S* and C*.
extern const CodepointRange kRemovableRanges[];
extern const std::size_t kRemovableRangesSize;
// Uppercase Latin letters with a single-codepoint lowercase form.
extern const CaseMapping kLatinLower[];
extern const std::size_t kLatinLowerSize;

bool IsSpace(char32_t cp);
bool IsRemovable(char32_t cp);
char32_t ToLowerLatin(char32_t cp);

}  // namespace unicode
}  // namespace cstk

#endif  // CSTK_CORPUS_UNICODE_TABLES_H_
