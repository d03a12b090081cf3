// src/selftrain/selftrain.cc

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

#include "cstk/selftrain/selftrain.h"

#include <cmath>
#include <set>
#include <thread>

#include <spdlog/spdlog.h>

#include "cstk/base/error.h"
#include "cstk/base/utf8.h"
#include "cstk/corpus/tags.h"
#include "cstk/corpus/text-normalize.h"
#include "cstk/corpus/vocabulary.h"
#include "cstk/ctc/decoder.h"
#include "cstk/lm/ngram-model.h"
#include "cstk/metrics/error-rates.h"
#include "json.hpp"

namespace cstk {

std::string_view RetrainModeName(RetrainMode mode) {
  return mode == RetrainMode::kFromScratch ? "from_scratch" : "fine_tune";
}

void ValidateSelfTrainConfig(const SelfTrainConfig &config) {
  if (std::isnan(config.confidence_threshold) || config.confidence_threshold > 0.0)
    throw Error(ErrorKind::kInvalidConfig, "confidence threshold must be <= 0 or -inf");
  if (config.threads < 1) throw Error(ErrorKind::kInvalidConfig, "threads must be >= 1");
}

PseudoLabelResult PseudoLabel(const Transcriber &transcriber, const Manifest &unlabeled,
                              const SelfTrainConfig &config) {
  ValidateSelfTrainConfig(config);
  for (const Utterance &u : unlabeled)
    if (u.split != Split::kUnlabeled)
      throw Error(ErrorKind::kInvalidConfig, "entry " + u.id + " is not unlabeled");

  std::vector<std::optional<Transcription>> results(unlabeled.size());
  std::vector<std::string> errors(unlabeled.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < unlabeled.size(); i += step) {
      try {
        results[i] = transcriber.Transcribe(unlabeled[i]);
      } catch (const std::exception &e) {
        errors[i] = e.what();
      }
    }
  };
  const auto workers = static_cast<std::size_t>(config.threads);
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (std::thread &t : pool) t.join();
  }

  PseudoLabelResult out;
  out.input = unlabeled.size();
  for (std::size_t i = 0; i < unlabeled.size(); ++i) {
    if (!results[i]) {
      spdlog::warn("TranscriberFailure: {}: {}", unlabeled[i].id, errors[i]);
      out.failed.push_back(unlabeled[i].id);
      continue;
    }
    const Transcription &t = *results[i];
    if (SplitWhitespace(t.text).empty()) {
      ++out.dropped_empty;
      continue;
    }
    if (!(t.confidence > config.confidence_threshold)) {
      ++out.dropped_low_confidence;
      continue;
    }
    Utterance u = unlabeled[i];
    u.text = t.text;
    u.split = Split::kTrain;
    u.pseudo = true;
    out.labeled.push_back(std::move(u));
  }
  return out;
}

Manifest MergeManifests(const Manifest &labeled, const Manifest &pseudo) {
  std::set<std::string> ids;
  for (const Utterance &u : labeled) ids.insert(u.id);
  Manifest out = labeled;
  for (const Utterance &u : pseudo) {
    if (!ids.insert(u.id).second)
      throw Error(ErrorKind::kDuplicateId, "id " + u.id + " is in both manifests");
    out.push_back(u);
  }
  return out;
}

std::string TrainingText(std::string_view tagged) {
  ScoringOptions o;
  return ScoringText(tagged, o);
}

double LmTarget::Evaluate() const {
  if (!model_) throw Error(ErrorKind::kInvalidConfig, "no language model trained yet");
  return Perplexity(*model_, dev_);
}

void LmTarget::Retrain(const Manifest &train, RetrainMode) {
  std::vector<std::string> texts;
  for (const Utterance &u : train) {
    std::string t = TrainingText(u.text);
    if (!t.empty()) texts.push_back(std::move(t));
  }
  model_ = TrainKneserNey(texts, config_);
}

MixerTarget::MixerTarget(FeatureLookup features, Vocabulary union_vocab, MixerTrainConfig config,
                         Manifest dev, std::optional<MixerParams> initial)
    : features_(std::move(features)),
      vocab_(std::move(union_vocab)),
      config_(config),
      dev_(std::move(dev)),
      params_(std::move(initial)) {
  dev_examples_ = Examples(dev_);
}

std::vector<MixerExample> MixerTarget::Examples(const Manifest &manifest) const {
  std::vector<MixerExample> out;
  for (const Utterance &u : manifest)
    out.push_back({features_(u), EncodeTranscript(TrainingText(u.text), vocab_)});
  return out;
}

double MixerTarget::Evaluate() const {
  if (!params_) throw Error(ErrorKind::kInvalidConfig, "no mixer trained yet");
  std::vector<std::string> refs, hyps;
  for (std::size_t i = 0; i < dev_.size(); ++i) {
    refs.push_back(TrainingText(dev_[i].text));
    hyps.push_back(GreedyDecode(MixerForward(*params_, dev_examples_[i].features), vocab_));
  }
  return CharErrorRate(refs, hyps).percent;
}

void MixerTarget::Retrain(const Manifest &train, RetrainMode mode) {
  const MixerParams *init =
      mode == RetrainMode::kFineTune && params_ ? &*params_ : nullptr;
  last_ = TrainMixer(Examples(train), dev_examples_, vocab_.size(), config_, init);
  params_ = last_.params;
}

std::string SelfTrainReport::Records() const {
  using nlohmann::ordered_json;
  auto number = [](double v) -> ordered_json {
    if (std::isfinite(v)) return v;
    return v < 0 ? "-inf" : "inf";
  };
  std::string out;
  ordered_json p;
  p["record"] = "pseudo_label";
  p["input"] = pseudo.input;
  p["retained"] = pseudo.labeled.size();
  p["dropped_low_confidence"] = pseudo.dropped_low_confidence;
  p["dropped_empty"] = pseudo.dropped_empty;
  p["failures"] = pseudo.failed.size();
  p["failed_ids"] = pseudo.failed;
  p["threshold"] = number(threshold);
  out += p.dump() + "\n";
  ordered_json m;
  m["record"] = "merge";
  m["labeled"] = labeled;
  m["pseudo"] = pseudo.labeled.size();
  m["merged"] = merged;
  out += m.dump() + "\n";
  ordered_json r;
  r["record"] = "retrain";
  r["target"] = target;
  r["mode"] = RetrainModeName(mode);
  out += r.dump() + "\n";
  ordered_json e;
  e["record"] = "metric";
  e["name"] = metric;
  e["before"] = number(before);
  e["after"] = number(after);
  out += e.dump() + "\n";
  return out;
}

SelfTrainReport SelfTrainRound(const Manifest &labeled, const Manifest &unlabeled,
                               const Transcriber &transcriber, RetrainTarget &target,
                               const SelfTrainConfig &config, Manifest *merged_out) {
  ValidateSelfTrainConfig(config);
  SelfTrainReport report;
  report.target = std::string(target.name());
  report.mode = config.mode;
  report.threshold = config.confidence_threshold;
  report.labeled = labeled.size();
  report.metric = std::string(target.metric_name());
  if (!target.has_artifact()) target.Retrain(labeled, RetrainMode::kFromScratch);
  report.before = target.Evaluate();
  report.pseudo = PseudoLabel(transcriber, unlabeled, config);
  const Manifest merged = MergeManifests(labeled, report.pseudo.labeled);
  report.merged = merged.size();
  target.Retrain(merged, config.mode);
  report.after = target.Evaluate();
  if (merged_out != nullptr) *merged_out = merged;
  return report;
}

}  // namespace cstk
