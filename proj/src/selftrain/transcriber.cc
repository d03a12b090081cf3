// src/selftrain/transcriber.cc

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

#include "cstk/selftrain/transcriber.h"

#include "cstk/base/error.h"
#include "cstk/base/utf8.h"
#include "cstk/kernels/kernels.h"

namespace cstk {

PosteriorgramLookup DirectoryLookup(std::filesystem::path dir,
                                    std::optional<Vocabulary> expected) {
  return [dir = std::move(dir), expected = std::move(expected)](const Utterance &utt) {
    return LoadPosteriorgram(dir / (utt.id + ".pgrm"), expected ? &*expected : nullptr);
  };
}

Transcription OracleTranscriber::Transcribe(const Utterance &utt) const {
  auto it = truth_.find(utt.id);
  if (it == truth_.end())
    throw Error(ErrorKind::kTranscriberFailure, "no reference text for " + utt.id);
  return {it->second, 0.0};
}

Transcription DecodeWithConfidence(const Matrix &logprobs, const Vocabulary &vocab,
                                   const DecoderConfig &config, const NGramModel *lm) {
  Transcription out;
  const std::vector<Hypothesis> hyps = PrefixBeamSearch(logprobs, vocab, config, lm);
  out.text = JoinStrings(SplitWhitespace(hyps.at(0).text), " ");
  double sum = 0.0;
  for (std::size_t t = 0; t < logprobs.rows(); ++t) sum += kernels::Max(logprobs.row(t));
  out.confidence = logprobs.rows() == 0 ? 0.0 : sum / static_cast<double>(logprobs.rows());
  return out;
}

Transcription PosteriorgramTranscriber::Transcribe(const Utterance &utt) const {
  const Posteriorgram p = lookup_(utt);
  return DecodeWithConfidence(p.frames, p.vocab, config_, lm_);
}

FeatureLookup SourceFeatures(std::vector<PosteriorgramLookup> sources, FeatureDomain domain) {
  return [sources = std::move(sources), domain](const Utterance &utt) {
    std::vector<Posteriorgram> pgrams;
    for (const PosteriorgramLookup &s : sources) pgrams.push_back(s(utt));
    return AssembleFeatures(pgrams, nullptr, domain);
  };
}

Transcription MixerTranscriber::Transcribe(const Utterance &utt) const {
  return DecodeWithConfidence(MixerForward(params_, features_(utt)), vocab_, config_, lm_);
}

}  // namespace cstk
