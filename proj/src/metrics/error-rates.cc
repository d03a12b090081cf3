// src/metrics/error-rates.cc

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

#include "cstk/metrics/error-rates.h"

#include "cstk/base/error.h"
#include "cstk/base/utf8.h"
#include "cstk/corpus/tags.h"
#include "cstk/corpus/text-normalize.h"

namespace cstk {

namespace {

void CheckPaired(const std::vector<std::string> &refs, const std::vector<std::string> &hyps) {
  if (refs.size() != hyps.size())
    throw Error(ErrorKind::kShapeMismatch, std::to_string(refs.size()) + " references but " +
                                               std::to_string(hyps.size()) + " hypotheses");
}

ErrorRate Finish(const AlignmentCounts &counts) {
  if (counts.ref_length() == 0)
    throw Error(ErrorKind::kEmptyReferenceCorpus, "references contain no tokens");
  ErrorRate r;
  r.counts = counts;
  r.percent = 100.0 * static_cast<double>(counts.distance()) /
              static_cast<double>(counts.ref_length());
  return r;
}

}  // namespace

std::string ScoringText(std::string_view text, const ScoringOptions &options) {
  if (!options.normalize) return JoinStrings(SplitWhitespace(text), " ");
  std::string plain;
  try {
    plain = StripTags(text);
  } catch (const Error &) {
    plain = std::string(text);
  }
  NormalizeOptions n;
  n.drop_numeric = false;
  return NormalizeText(plain, n).value_or("");
}

std::vector<std::string> WordTokens(std::string_view text, const ScoringOptions &options) {
  return SplitWhitespace(ScoringText(text, options));
}

std::u32string CharTokens(std::string_view text, const ScoringOptions &options) {
  std::u32string out;
  for (char32_t c : DecodeUtf8(ScoringText(text, options)))
    if (!(options.cer_ignore_spaces && c == U' ')) out.push_back(c);
  return out;
}

ErrorRate WordErrorRate(const std::vector<std::string> &refs, const std::vector<std::string> &hyps,
                        const ScoringOptions &options) {
  CheckPaired(refs, hyps);
  AlignmentCounts total;
  for (std::size_t i = 0; i < refs.size(); ++i)
    total += EditDistance(WordTokens(refs[i], options), WordTokens(hyps[i], options));
  return Finish(total);
}

ErrorRate CharErrorRate(const std::vector<std::string> &refs, const std::vector<std::string> &hyps,
                        const ScoringOptions &options) {
  CheckPaired(refs, hyps);
  AlignmentCounts total;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const std::u32string r = CharTokens(refs[i], options), h = CharTokens(hyps[i], options);
    total += EditDistance(std::vector<char32_t>(r.begin(), r.end()),
                          std::vector<char32_t>(h.begin(), h.end()));
  }
  return Finish(total);
}

double SentenceErrorRate(const std::vector<std::string> &refs,
                         const std::vector<std::string> &hyps, const ScoringOptions &options) {
  CheckPaired(refs, hyps);
  if (refs.empty()) throw Error(ErrorKind::kEmptyCorpus, "no sentence pairs");
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < refs.size(); ++i)
    if (ScoringText(refs[i], options) != ScoringText(hyps[i], options)) ++wrong;
  return 100.0 * static_cast<double>(wrong) / static_cast<double>(refs.size());
}

}  // namespace cstk
