// include/cstk/lm/arpa.h

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

#ifndef CSTK_LM_ARPA_H_
#define CSTK_LM_ARPA_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "cstk/lm/ngram-model.h"

namespace cstk {

/// Canonical ARPA text: "\data\" with "ngram k=count" lines, then one
/// "\k-grams:" section per order with "log10prob<TAB>w1 .. wk[<TAB>log10bow]"
/// lines sorted by token sequence, then "\end\". Values are printed with six
/// decimals, so write(read(write(m))) is byte-identical to write(m).
std::string WriteArpa(const NGramModel &model);

inline constexpr double kMissingUnkLog10Prob = -99.0;

/// A missing <unk> unigram is added at kMissingUnkLog10Prob.
/// Throws ArpaSyntax (with the line number) or CountMismatch when a section
/// does not hold the declared number of entries.
NGramModel ReadArpa(std::string_view text);

NGramModel LoadArpa(const std::filesystem::path &path);
void SaveArpa(const std::filesystem::path &path, const NGramModel &model);

}  // namespace cstk

#endif  // CSTK_LM_ARPA_H_
