// include/cstk/selftrain/transcriber.h

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

#ifndef CSTK_SELFTRAIN_TRANSCRIBER_H_
#define CSTK_SELFTRAIN_TRANSCRIBER_H_

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cstk/corpus/manifest.h"
#include "cstk/corpus/posteriorgram.h"
#include "cstk/ctc/decoder.h"
#include "cstk/lm/ngram-model.h"
#include "cstk/mixer/mixer-model.h"
#include "cstk/mixer/union-vocab.h"

namespace cstk {

struct Transcription {
  std::string text;
  double confidence = 0.0;  // <= 0
};

/// Anything that can turn an utterance into text. Implementations must be
/// deterministic and safe to call from several threads at once.
class Transcriber {
 public:
  virtual ~Transcriber() = default;
  virtual Transcription Transcribe(const Utterance &utt) const = 0;
};

/// Posteriorgram for an utterance.
using PosteriorgramLookup = std::function<Posteriorgram(const Utterance &)>;

/// Reads "<dir>/<id>.pgrm", checking the vocabulary when `expected` is given.
PosteriorgramLookup DirectoryLookup(std::filesystem::path dir,
                                    std::optional<Vocabulary> expected = std::nullopt);

/// Ground truth from a table keyed by utterance id; confidence 0. Unknown ids
/// throw TranscriberFailure.
class OracleTranscriber : public Transcriber {
 public:
  explicit OracleTranscriber(std::map<std::string, std::string> truth)
      : truth_(std::move(truth)) {}
  Transcription Transcribe(const Utterance &utt) const override;

 private:
  std::map<std::string, std::string> truth_;
};

/// Decodes log-probability frames. The text is the best hypothesis with
/// whitespace collapsed; the confidence is the mean over frames of the
/// largest log-probability (0 for no frames).
Transcription DecodeWithConfidence(const Matrix &logprobs, const Vocabulary &vocab,
                                   const DecoderConfig &config, const NGramModel *lm);

/// Decodes a single model's posteriorgram.
class PosteriorgramTranscriber : public Transcriber {
 public:
  PosteriorgramTranscriber(PosteriorgramLookup lookup, DecoderConfig config,
                           const NGramModel *lm = nullptr)
      : lookup_(std::move(lookup)), config_(config), lm_(lm) {}
  Transcription Transcribe(const Utterance &utt) const override;

 private:
  PosteriorgramLookup lookup_;
  DecoderConfig config_;
  const NGramModel *lm_;
};

/// Features for the mixer: the sources' posteriorgrams assembled in order.
using FeatureLookup = std::function<Matrix(const Utterance &)>;
FeatureLookup SourceFeatures(std::vector<PosteriorgramLookup> sources,
                             FeatureDomain domain = FeatureDomain::kProbability);

/// Runs the mixer on the sources and decodes its union-vocabulary output.
class MixerTranscriber : public Transcriber {
 public:
  MixerTranscriber(FeatureLookup features, MixerParams params, Vocabulary union_vocab,
                   DecoderConfig config, const NGramModel *lm = nullptr)
      : features_(std::move(features)),
        params_(std::move(params)),
        vocab_(std::move(union_vocab)),
        config_(config),
        lm_(lm) {}
  Transcription Transcribe(const Utterance &utt) const override;

 private:
  FeatureLookup features_;
  MixerParams params_;
  Vocabulary vocab_;
  DecoderConfig config_;
  const NGramModel *lm_;
};

}  // namespace cstk

#endif  // CSTK_SELFTRAIN_TRANSCRIBER_H_
