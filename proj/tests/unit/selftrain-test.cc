// tests/unit/selftrain-test.cc

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

#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cstk/base/error.h"
#include "cstk/lm/arpa.h"
#include "cstk/mixer/synthetic.h"
#include "cstk/selftrain/selftrain.h"
#include "doctest.h"
#include "json.hpp"

using namespace cstk;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Utterance Unlabeled(const std::string &id) {
  Utterance u;
  u.id = id;
  u.split = Split::kUnlabeled;
  u.duration_s = 1.0;
  return u;
}

Utterance Labeled(const std::string &id, const std::string &text) {
  Utterance u;
  u.id = id;
  u.text = text;
  u.split = Split::kTrain;
  u.duration_s = 1.0;
  return u;
}

// Confidence and text fixed per id; ids starting with "fail" throw.
class TableTranscriber : public Transcriber {
 public:
  explicit TableTranscriber(std::map<std::string, Transcription> rows) : rows_(std::move(rows)) {}
  Transcription Transcribe(const Utterance &utt) const override {
    if (utt.id.rfind("fail", 0) == 0) throw Error(ErrorKind::kIoError, "cannot read");
    return rows_.at(utt.id);
  }

 private:
  std::map<std::string, Transcription> rows_;
};

std::vector<std::string> TopicSentences(const std::vector<std::string> &words, std::size_t n,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> len(3, 8);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s;
    for (int k = len(rng); k > 0; --k) s += (s.empty() ? "" : " ") + words[pick(rng)];
    out.push_back(s);
  }
  return out;
}

// Synthetic utterances served from memory by id.
struct SyntheticStore {
  std::map<std::string, SyntheticUtterance> by_id;

  Manifest Add(const std::string &prefix, std::size_t n, std::uint64_t seed, Split split) {
    Manifest m;
    std::size_t i = 0;
    for (SyntheticUtterance &s : GenerateSynthetic(n, seed)) {
      Utterance u;
      u.id = prefix + std::to_string(i++);
      u.split = split;
      if (split != Split::kUnlabeled) u.text = s.text;
      by_id[u.id] = std::move(s);
      m.push_back(u);
    }
    return m;
  }

  std::map<std::string, std::string> Truth() const {
    std::map<std::string, std::string> t;
    for (const auto &[id, s] : by_id) t[id] = s.text;
    return t;
  }

  FeatureLookup Features() const {
    std::vector<PosteriorgramLookup> sources;
    for (std::size_t k = 0; k < 2; ++k)
      sources.push_back([this, k](const Utterance &u) { return by_id.at(u.id).sources[k]; });
    return SourceFeatures(sources);
  }
};

MixerTrainConfig SmallMixer() {
  MixerTrainConfig c;
  c.hidden = 12;
  c.learning_rate = 1e-2;
  c.max_epochs = 4;
  c.seed = 3;
  return c;
}

}  // namespace

TEST_CASE("pseudo_label with an oracle") {
  Manifest unl;
  std::map<std::string, std::string> truth;
  for (int i = 0; i < 10; ++i) {
    unl.push_back(Unlabeled("u" + std::to_string(i)));
    truth["u" + std::to_string(i)] = "text " + std::to_string(i);
  }
  const OracleTranscriber oracle(truth);
  const PseudoLabelResult all = PseudoLabel(oracle, unl, {});
  REQUIRE(all.labeled.size() == unl.size());
  for (std::size_t i = 0; i < unl.size(); ++i) {
    CHECK(all.labeled[i].id == unl[i].id);
    CHECK(all.labeled[i].text == truth.at(unl[i].id));
    CHECK(all.labeled[i].pseudo);
    CHECK(all.labeled[i].split == Split::kTrain);
  }
  SelfTrainConfig strict;
  strict.confidence_threshold = 0.0;
  CHECK(PseudoLabel(oracle, unl, strict).labeled.empty());
  CHECK(PseudoLabel(oracle, unl, strict).dropped_low_confidence == unl.size());
  // Several worker threads give the same result.
  SelfTrainConfig threaded;
  threaded.threads = 3;
  CHECK(PseudoLabel(oracle, unl, threaded).labeled == all.labeled);
}

TEST_CASE("pseudo_label thresholds, empties and failures") {
  Manifest unl;
  std::map<std::string, Transcription> rows;
  for (int i = 0; i < 8; ++i) {
    const std::string id = "u" + std::to_string(i);
    unl.push_back(Unlabeled(id));
    rows[id] = {"w" + std::to_string(i), -0.5 - 0.25 * i};  // median -1.375
  }
  const TableTranscriber t(rows);
  SelfTrainConfig median;
  median.confidence_threshold = -1.375;
  const PseudoLabelResult half = PseudoLabel(t, unl, median);
  CHECK(half.labeled.size() == 4);
  CHECK(half.dropped_low_confidence == 4);

  rows["e"] = {"   ", -0.1};
  unl.push_back(Unlabeled("e"));
  unl.push_back(Unlabeled("fail1"));
  const PseudoLabelResult r = PseudoLabel(TableTranscriber(rows), unl, {});
  CHECK(r.dropped_empty == 1);
  CHECK(r.failed == std::vector<std::string>{"fail1"});
  CHECK(r.labeled.size() == 8);
  CHECK(r.input == r.labeled.size() + r.dropped_empty + r.dropped_low_confidence + r.failed.size());

  Manifest wrong = unl;
  wrong[0].split = Split::kTrain;
  CHECK_THROWS_AS(PseudoLabel(t, wrong, {}), Error);
  SelfTrainConfig positive;
  positive.confidence_threshold = 0.5;
  CHECK_THROWS_AS(PseudoLabel(t, unl, positive), Error);
}

TEST_CASE("merge_manifests") {
  Manifest labeled, pseudo;
  for (int i = 0; i < 100; ++i) labeled.push_back(Labeled("l" + std::to_string(i), "x"));
  for (int i = 0; i < 80; ++i) {
    Utterance u = Labeled("p" + std::to_string(i), "y");
    u.pseudo = true;
    pseudo.push_back(u);
  }
  const Manifest merged = MergeManifests(labeled, pseudo);
  CHECK(merged.size() == 180);
  CHECK(!merged[99].pseudo);
  CHECK(merged[100].pseudo);
  CHECK(MergeManifests(labeled, {}) == labeled);
  Manifest clash = pseudo;
  clash[5].id = "l7";
  try {
    MergeManifests(labeled, clash);
    FAIL("expected DuplicateId");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kDuplicateId);
  }
}

TEST_CASE("lm round lowers dev perplexity with topic-matched text") {
  const std::vector<std::string> sport = {"match", "goal", "team", "coach", "win", "the", "a"};
  const std::vector<std::string> food = {"bread", "salt", "oil", "cook", "eat", "the", "a"};
  Manifest labeled, unlabeled;
  std::map<std::string, std::string> truth;
  int n = 0;
  for (const std::string &s : TopicSentences(sport, 200, 1))
    labeled.push_back(Labeled("l" + std::to_string(n++), s));
  for (const std::string &s : TopicSentences(food, 200, 2)) {
    const std::string id = "u" + std::to_string(n++);
    unlabeled.push_back(Unlabeled(id));
    truth[id] = s;
  }
  const Manifest before_labeled = labeled;
  KNConfig kn;
  kn.order = 3;
  LmTarget target(kn, TopicSentences(food, 50, 3));
  Manifest merged;
  const SelfTrainReport report =
      SelfTrainRound(labeled, unlabeled, OracleTranscriber(truth), target, {}, &merged);
  CHECK(report.after <= report.before);
  CHECK(report.metric == "dev_perplexity");
  CHECK(labeled == before_labeled);
  CHECK(report.merged == labeled.size() + unlabeled.size());
  CHECK(merged.size() == report.merged);

  // Deterministic merged output.
  LmTarget again(kn, TopicSentences(food, 50, 3));
  Manifest merged2;
  SelfTrainRound(labeled, unlabeled, OracleTranscriber(truth), again, {}, &merged2);
  CHECK(merged2 == merged);
  CHECK(WriteArpa(again.model()) == WriteArpa(target.model()));

  // Nothing unlabeled: same as a plain retrain on the labeled data.
  LmTarget empty(kn, TopicSentences(food, 50, 3));
  SelfTrainRound(labeled, {}, OracleTranscriber(truth), empty, {});
  LmTarget plain(kn, TopicSentences(food, 50, 3));
  plain.Retrain(labeled, RetrainMode::kFromScratch);
  CHECK(WriteArpa(empty.model()) == WriteArpa(plain.model()));
}

TEST_CASE("mixer round in both modes") {
  SyntheticStore store;
  const Manifest labeled = store.Add("l", 30, 1, Split::kTrain);
  const Manifest unlabeled = store.Add("u", 20, 2, Split::kUnlabeled);
  const Manifest dev = store.Add("d", 10, 3, Split::kDev);
  const OracleTranscriber oracle(store.Truth());
  std::string scratch_records, tune_records;
  for (RetrainMode mode : {RetrainMode::kFromScratch, RetrainMode::kFineTune}) {
    MixerTarget target(store.Features(), SyntheticUnionVocab(), SmallMixer(), dev);
    SelfTrainConfig config;
    config.mode = mode;
    const SelfTrainReport report = SelfTrainRound(labeled, unlabeled, oracle, target, config);
    CHECK(target.params().size() == MixerParamCount(target.params().dims()));
    CHECK(report.after >= 0.0);
    const std::string records = report.Records();
    std::vector<nlohmann::json> lines;
    std::size_t start = 0;
    while (start < records.size()) {
      const std::size_t end = records.find('\n', start);
      lines.push_back(nlohmann::json::parse(records.substr(start, end - start)));
      start = end + 1;
    }
    REQUIRE(lines.size() == 4);
    CHECK(lines[0]["record"] == "pseudo_label");
    CHECK(lines[0]["input"] == 20);
    CHECK(lines[0]["retained"] == 20);
    CHECK(lines[1]["merged"] == 50);
    CHECK(lines[2]["mode"] == RetrainModeName(mode));
    CHECK(lines[3]["name"] == "dev_cer");
    (mode == RetrainMode::kFromScratch ? scratch_records : tune_records) = records;
  }
  CHECK(scratch_records != tune_records);

  // A mixer transcriber feeds the round like any other.
  MixerTarget base(store.Features(), SyntheticUnionVocab(), SmallMixer(), dev);
  base.Retrain(labeled, RetrainMode::kFromScratch);
  DecoderConfig greedy;
  greedy.beam_width = 1;
  const MixerTranscriber mt(store.Features(), base.params(), SyntheticUnionVocab(), greedy);
  const PseudoLabelResult r = PseudoLabel(mt, unlabeled, {});
  CHECK(r.input == 20);
  for (const Utterance &u : r.labeled) CHECK(u.pseudo);
}

TEST_CASE("decoding transcriber confidence") {
  const Vocabulary v = Vocabulary::FromListing({"<blank>", "a"});
  Matrix m(2, 2);
  m(0, 0) = std::log(0.25);
  m(0, 1) = std::log(0.75);
  m(1, 0) = std::log(0.5);
  m(1, 1) = std::log(0.5);
  const Transcription t = DecodeWithConfidence(m, v, DecoderConfig{}, nullptr);
  CHECK(t.text == "a");
  CHECK(t.confidence == doctest::Approx((std::log(0.75) + std::log(0.5)) / 2));
  CHECK(t.confidence < 0);
}
