// include/cstk/selftrain/selftrain.h

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

#ifndef CSTK_SELFTRAIN_SELFTRAIN_H_
#define CSTK_SELFTRAIN_SELFTRAIN_H_

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cstk/corpus/manifest.h"
#include "cstk/lm/kneser-ney.h"
#include "cstk/mixer/mixer-train.h"
#include "cstk/selftrain/transcriber.h"

namespace cstk {

enum class RetrainMode { kFromScratch, kFineTune };

std::string_view RetrainModeName(RetrainMode mode);  // "from_scratch", "fine_tune"

struct SelfTrainConfig {
  // An item is kept when its confidence is strictly greater; -infinity keeps
  // every item.
  double confidence_threshold = -std::numeric_limits<double>::infinity();
  RetrainMode mode = RetrainMode::kFromScratch;
  int threads = 1;
};

/// Throws InvalidConfig for a positive or NaN threshold or threads < 1.
void ValidateSelfTrainConfig(const SelfTrainConfig &config);

struct PseudoLabelResult {
  Manifest labeled;  // split=train, pseudo=true, in input order
  std::size_t input = 0;
  std::size_t dropped_low_confidence = 0;
  std::size_t dropped_empty = 0;
  std::vector<std::string> failed;  // ids whose transcription threw
};

/// Transcribes every unlabeled entry. Items whose transcriber throws are
/// logged and skipped. Throws InvalidConfig if an entry is not unlabeled.
PseudoLabelResult PseudoLabel(const Transcriber &transcriber, const Manifest &unlabeled,
                              const SelfTrainConfig &config);

/// Labeled entries followed by pseudo entries. Throws DuplicateId.
Manifest MergeManifests(const Manifest &labeled, const Manifest &pseudo);

/// An artifact the round can rebuild from a manifest and score on its dev set.
class RetrainTarget {
 public:
  virtual ~RetrainTarget() = default;
  virtual std::string_view name() const = 0;
  virtual std::string_view metric_name() const = 0;
  virtual bool has_artifact() const = 0;
  // Dev metric of the current artifact; lower is better.
  virtual double Evaluate() const = 0;
  // Replaces the current artifact.
  virtual void Retrain(const Manifest &train, RetrainMode mode) = 0;
};

/// Kneser-Ney LM over the manifest texts (tags stripped, normalized). Both
/// modes re-estimate from the merged texts, since the estimate is a closed
/// form of the counts. Metric: dev perplexity.
class LmTarget : public RetrainTarget {
 public:
  LmTarget(KNConfig config, std::vector<std::string> dev_texts)
      : config_(config), dev_(std::move(dev_texts)) {}
  std::string_view name() const override { return "lm"; }
  std::string_view metric_name() const override { return "dev_perplexity"; }
  bool has_artifact() const override { return model_.has_value(); }
  double Evaluate() const override;
  void Retrain(const Manifest &train, RetrainMode mode) override;
  const NGramModel &model() const { return *model_; }

 private:
  KNConfig config_;
  std::vector<std::string> dev_;
  std::optional<NGramModel> model_;
};

/// Mixer over source features. from_scratch starts from the seeded random
/// initialization, fine_tune from the current parameters. The dev manifest
/// drives early stopping and the metric, dev CER with greedy decoding.
class MixerTarget : public RetrainTarget {
 public:
  MixerTarget(FeatureLookup features, Vocabulary union_vocab, MixerTrainConfig config,
              Manifest dev, std::optional<MixerParams> initial = std::nullopt);
  std::string_view name() const override { return "mixer"; }
  std::string_view metric_name() const override { return "dev_cer"; }
  bool has_artifact() const override { return params_.has_value(); }
  double Evaluate() const override;
  void Retrain(const Manifest &train, RetrainMode mode) override;
  const MixerParams &params() const { return *params_; }
  const MixerTrainResult &last_training() const { return last_; }

  std::vector<MixerExample> Examples(const Manifest &manifest) const;

 private:
  FeatureLookup features_;
  Vocabulary vocab_;
  MixerTrainConfig config_;
  Manifest dev_;
  std::vector<MixerExample> dev_examples_;
  std::optional<MixerParams> params_;
  MixerTrainResult last_;
};

/// Text a mixer is trained on: tags stripped and normalized, digits kept.
std::string TrainingText(std::string_view tagged);

struct SelfTrainReport {
  std::string target;
  RetrainMode mode = RetrainMode::kFromScratch;
  double threshold = 0.0;
  std::size_t labeled = 0;
  PseudoLabelResult pseudo;  // manifest omitted from the records
  std::size_t merged = 0;
  std::string metric;
  double before = 0.0;
  double after = 0.0;

  /// One JSON object per line: a "pseudo_label" record, a "merge" record, a
  /// "retrain" record and a "metric" record.
  std::string Records() const;
};

/// pseudo_label -> merge -> retrain. When the target has no artifact yet it
/// is first trained from scratch on the labeled manifest, which is what
/// "before" measures. The labeled manifest is not modified.
SelfTrainReport SelfTrainRound(const Manifest &labeled, const Manifest &unlabeled,
                               const Transcriber &transcriber, RetrainTarget &target,
                               const SelfTrainConfig &config, Manifest *merged_out = nullptr);

}  // namespace cstk

#endif  // CSTK_SELFTRAIN_SELFTRAIN_H_
