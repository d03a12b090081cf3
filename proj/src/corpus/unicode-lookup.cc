// src/corpus/unicode-lookup.cc

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

#include <algorithm>

#include "cstk/corpus/unicode-tables.h"

namespace cstk {
namespace unicode {

namespace {
bool InRanges(const CodepointRange *ranges, std::size_t n, char32_t cp) {
  const CodepointRange *end = ranges + n;
  const CodepointRange *it = std::upper_bound(
      ranges, end, cp,
      [](char32_t v, const CodepointRange &r) { return v < r.lo; });
  if (it == ranges) return false;
  --it;
  return cp >= it->lo && cp <= it->hi;
}
}  // namespace

bool IsSpace(char32_t cp) { return InRanges(kSpaceRanges, kSpaceRangesSize, cp); }

bool IsRemovable(char32_t cp) {
  return InRanges(kRemovableRanges, kRemovableRangesSize, cp);
}

char32_t ToLowerLatin(char32_t cp) {
  const CaseMapping *end = kLatinLower + kLatinLowerSize;
  const CaseMapping *it = std::lower_bound(
      kLatinLower, end, cp,
      [](const CaseMapping &m, char32_t v) { return m.upper < v; });
  if (it != end && it->upper == cp) return it->lower;
  return cp;
}

}  // namespace unicode
}  // namespace cstk
