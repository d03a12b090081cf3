// tests/unit/mixer-test.cc

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
#include <cmath>
#include <random>
#include <vector>

#include "cstk/base/error.h"
#include "cstk/ctc/ctc-loss.h"
#include "cstk/ctc/decoder.h"
#include "cstk/kernels/kernels.h"
#include "cstk/mixer/mixer-model.h"
#include "cstk/mixer/mixer-train.h"
#include "cstk/mixer/synthetic.h"
#include "cstk/mixer/union-vocab.h"
#include "doctest.h"
#include "oracles/ctc-oracle.h"

using namespace cstk;

namespace {

Vocabulary V(std::vector<std::string> listing) {
  listing.insert(listing.begin(), "<blank>");
  return Vocabulary::FromListing(listing);
}

Posteriorgram RandomPgram(const Vocabulary &v, std::size_t frames, std::mt19937_64 &rng) {
  Posteriorgram p;
  p.vocab = v;
  p.frames = oracle::RandomLogprobs(frames, v.size(), rng);
  return p;
}

Matrix RandomFeatures(std::size_t t, std::size_t f, std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix m(t, f);
  for (double &x : m.data()) x = u(rng);
  return m;
}

std::vector<MixerExample> SyntheticExamples(std::size_t n, std::uint64_t seed) {
  const Vocabulary u = SyntheticUnionVocab();
  std::vector<MixerExample> out;
  for (const SyntheticUtterance &s : GenerateSynthetic(n, seed))
    out.push_back({AssembleFeatures(s.sources), EncodeTranscript(s.text, u)});
  return out;
}

}  // namespace

TEST_CASE("build_union examples") {
  const UnionVocabMap m = BuildUnion({V({"a", "b"}), V({"b", "c"})});
  CHECK(m.union_vocab == V({"a", "b", "c"}));
  CHECK(m.to_union[0] == std::vector<int>{0, 1, 2});
  CHECK(m.to_union[1] == std::vector<int>{0, 2, 3});
  const UnionVocabMap same = BuildUnion({V({"a", "b"}), V({"a", "b"})});
  CHECK(same.union_vocab == V({"a", "b"}));
  CHECK(same.to_union[0] == std::vector<int>{0, 1, 2});
  CHECK(same.to_union[1] == same.to_union[0]);
  CHECK(BuildUnion({V({"a"}), V({"b"}), V({"c"})}).union_vocab.size() == 4);
}

TEST_CASE("build_union is order independent") {
  const std::vector<Vocabulary> vs = {V({"a", "q"}), V({"b", "q", "z"}), V({" ", "a", "c"})};
  const UnionVocabMap base = BuildUnion(vs);
  std::vector<int> perm = {0, 1, 2};
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<Vocabulary> p;
    for (int i : perm) p.push_back(vs[static_cast<std::size_t>(i)]);
    const UnionVocabMap m = BuildUnion(p);
    CHECK(m.union_vocab == base.union_vocab);
    for (std::size_t i = 0; i < perm.size(); ++i)
      CHECK(m.to_union[i] == base.to_union[static_cast<std::size_t>(perm[i])]);
  }
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs[i].size(); ++j)
      CHECK(base.union_vocab.symbol(base.to_union[i][j]) == vs[i].symbol(static_cast<int>(j)));
}

TEST_CASE("assemble_features") {
  std::mt19937_64 rng(1);
  const std::vector<Posteriorgram> three = {RandomPgram(V({"a", "b"}), 10, rng),
                                            RandomPgram(V({"a", "b", "c"}), 10, rng),
                                            RandomPgram(V({"a", "b", "c", "d"}), 10, rng)};
  const Matrix f = AssembleFeatures(three);
  CHECK(f.cols() == 12);
  CHECK(f.rows() == 10);
  CHECK(f(3, 2) == doctest::Approx(std::exp(three[0].frames(3, 2))));
  CHECK(f(3, 4) == doctest::Approx(std::exp(three[1].frames(3, 1))));
  const Matrix enc(10, 8, 0.5);
  const Matrix g = AssembleFeatures(three, &enc);
  CHECK(g.cols() == 20);
  CHECK(g(9, 19) == 0.5);
  CHECK(AssembleFeatures(three, nullptr, FeatureDomain::kLogProbability)(0, 0) ==
        three[0].frames(0, 0));
  std::vector<Posteriorgram> bad = three;
  bad[2] = RandomPgram(V({"a"}), 11, rng);
  try {
    AssembleFeatures(bad);
    FAIL("expected FrameCountMismatch");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kFrameCountMismatch);
  }
}

TEST_CASE("mixer_forward") {
  std::mt19937_64 rng(2);
  const MixerDims dims{6, 4, 5};
  const Matrix x = RandomFeatures(7, 6, rng);
  const Matrix zero = MixerForward(MixerParams(dims), x);
  CHECK(zero.rows() == 7);
  CHECK(zero.cols() == 5);
  for (double v : zero.data()) CHECK(v == doctest::Approx(std::log(1.0 / 5)));

  const MixerParams p = MixerParams::Random(dims, 3);
  CHECK(p.size() == MixerParamCount(dims));
  const Matrix y = MixerForward(p, x);
  for (std::size_t t = 0; t < y.rows(); ++t)
    CHECK(std::abs(kernels::LogSumExp(y.row(t))) < 1e-6);
  CHECK(MixerForward(p, x) == y);

  // Changing one frame moves outputs before and after it.
  Matrix x2 = x;
  x2(3, 1) += 0.5;
  const Matrix y2 = MixerForward(p, x2);
  CHECK(y2(0, 0) != y(0, 0));
  CHECK(y2(6, 0) != y(6, 0));
  CHECK_THROWS_AS(MixerForward(p, RandomFeatures(7, 5, rng)), Error);
}

TEST_CASE("mixer_backward matches finite differences") {
  std::mt19937_64 rng(4);
  const MixerDims dims{5, 3, 4};
  MixerParams p = MixerParams::Random(dims, 5);
  const Matrix x = RandomFeatures(6, 5, rng);
  const std::vector<int> target = {1, 3, 2};
  const MixerLossResult r = MixerBackward(p, x, target);
  CHECK(r.loss == doctest::Approx(CtcLoss(MixerForward(p, x), target).loss));
  std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
  const double eps = 1e-4;
  for (int n = 0; n < 50; ++n) {
    const std::size_t k = pick(rng);
    const double saved = p.values()[k];
    p.values()[k] = saved + eps;
    const double up = CtcLoss(MixerForward(p, x), target).loss;
    p.values()[k] = saved - eps;
    const double down = CtcLoss(MixerForward(p, x), target).loss;
    p.values()[k] = saved;
    const double fd = (up - down) / (2 * eps);
    CAPTURE(k);
    CHECK(std::abs(fd - r.grad[k]) / std::max(std::abs(r.grad[k]), 1e-6) < 1e-3);
  }
  // Every block receives gradient.
  const MixerParams::LstmBlock first = p.Lstm(0, 0);
  double first_norm = 0.0;
  for (std::size_t i = first.w; i < first.u; ++i) first_norm += std::abs(r.grad[i]);
  CHECK(first_norm > 0.0);
}

TEST_CASE("mixer_backward special cases") {
  std::mt19937_64 rng(6);
  const MixerDims dims{3, 2, 3};
  const Matrix x = RandomFeatures(4, 3, rng);
  const std::vector<int> target = {1, 2};
  const Matrix uniform(4, 3, std::log(1.0 / 3));
  CHECK(MixerBackward(MixerParams(dims), x, target).loss ==
        doctest::Approx(CtcLoss(uniform, target).loss));
  const std::vector<int> impossible = {1, 1, 1};
  const MixerLossResult r = MixerBackward(MixerParams::Random(dims, 1), x, impossible);
  CHECK(std::isinf(r.loss));
  CHECK(std::all_of(r.grad.begin(), r.grad.end(), [](double g) { return g == 0.0; }));
}

TEST_CASE("mixer file format") {
  const MixerParams p = MixerParams::Random({4, 3, 5}, 9);
  const std::string bytes = WriteMixer(p);
  CHECK(bytes.substr(0, 4) == "MIXR");
  CHECK(bytes.size() == 4 + 2 + 12 + 4 * p.size());
  const MixerParams back = ReadMixer(bytes);
  CHECK(back.dims() == p.dims());
  for (std::size_t i = 0; i < p.size(); ++i)
    CHECK(back.values()[i] == static_cast<double>(static_cast<float>(p.values()[i])));
  CHECK(WriteMixer(back) == bytes);
  CHECK_THROWS_AS(ReadMixer("MIXY" + bytes.substr(4)), Error);
  CHECK_THROWS_AS(ReadMixer(bytes.substr(0, bytes.size() - 1)), Error);
  CHECK_THROWS_AS(ReadMixer(bytes + "x"), Error);
  CHECK_THROWS_AS(ReadMixer("MI"), Error);
}

TEST_CASE("train_mixer contracts") {
  const auto train = SyntheticExamples(12, 1);
  const auto dev = SyntheticExamples(4, 2);
  const std::size_t v = SyntheticUnionVocab().size();
  MixerTrainConfig config;
  config.hidden = 6;
  config.max_epochs = 3;
  config.batch_size = 4;
  config.seed = 11;

  MixerTrainConfig frozen = config;
  frozen.learning_rate = 0.0;
  const MixerTrainResult still = TrainMixer(train, dev, v, frozen);
  CHECK(still.params == MixerParams::Random({train[0].features.cols(), 6, v}, 11));
  REQUIRE(still.history.size() >= 2);
  for (const EpochRecord &r : still.history) CHECK(r.dev_loss == still.history[0].dev_loss);

  const MixerTrainResult a = TrainMixer(train, dev, v, config);
  const MixerTrainResult b = TrainMixer(train, dev, v, config);
  CHECK(a.params == b.params);
  MixerTrainConfig threaded = config;
  threaded.threads = 3;
  CHECK(TrainMixer(train, dev, v, threaded).params == a.params);
  CHECK(a.history.front().epoch == 0);

  std::vector<MixerExample> bad = train;
  bad[0].features = Matrix(3, 5);
  CHECK_THROWS_AS(TrainMixer(bad, dev, v, config), Error);
  CHECK_THROWS_AS(TrainMixer({}, dev, v, config), Error);
  MixerTrainConfig invalid = config;
  invalid.batch_size = 0;
  CHECK_THROWS_AS(TrainMixer(train, dev, v, invalid), Error);
}

TEST_CASE("synthetic task trains and decodes") {
  const auto train = SyntheticExamples(60, 21);
  const auto dev = SyntheticExamples(15, 22);
  const Vocabulary u = SyntheticUnionVocab();
  MixerTrainConfig config;
  config.hidden = 16;
  config.learning_rate = 1e-2;
  config.max_epochs = 6;
  const MixerTrainResult r = TrainMixer(train, dev, u.size(), config);
  CHECK(r.history[static_cast<std::size_t>(r.best_epoch)].dev_loss < r.history[0].dev_loss);
  CHECK(r.best_epoch > 0);
  // The mixer output is a posteriorgram the decoder accepts as is.
  const Matrix out = MixerForward(r.params, dev[0].features);
  DecoderConfig dc;
  dc.beam_width = 8;
  CHECK(PrefixBeamSearch(out, u, dc).size() == 1);
}

TEST_CASE("synthetic generator") {
  const auto a = GenerateSynthetic(20, 5);
  const auto b = GenerateSynthetic(20, 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].text == b[i].text);
    CHECK(a[i].sources[0].frames == b[i].sources[0].frames);
    CHECK(a[i].text.size() >= 5);
    CHECK(a[i].text.size() <= 15);
    for (const Posteriorgram &p : a[i].sources) ValidatePosteriorgram(p);
    // Each source decodes its own letters and loses the others.
    const std::string ga = GreedyDecode(a[i].sources[0].frames, a[i].sources[0].vocab);
    std::string own;
    for (char c : a[i].text)
      if (c <= 'e') own.push_back(c);
    CHECK(ga == own);
  }
  CHECK(SyntheticSourceVocab(0).size() == 6);
  CHECK(SyntheticUnionVocab().size() == 11);
}
