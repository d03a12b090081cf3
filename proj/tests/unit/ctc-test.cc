// tests/unit/ctc-test.cc

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
#include <random>
#include <string>
#include <vector>

#include "cstk/base/error.h"
#include "cstk/corpus/vocabulary.h"
#include "cstk/ctc/ctc-loss.h"
#include "cstk/ctc/decoder.h"
#include "cstk/lm/arpa.h"
#include "doctest.h"
#include "oracles/ctc-oracle.h"

using namespace cstk;

namespace {

Matrix FromProbs(const std::vector<std::vector<double>> &rows) {
  Matrix m(rows.size(), rows.at(0).size());
  for (std::size_t t = 0; t < rows.size(); ++t)
    for (std::size_t k = 0; k < rows[t].size(); ++k) m(t, k) = std::log(rows[t][k]);
  return m;
}

// Frames whose argmax follows `path`, with mass `top` on the argmax.
Matrix PathFrames(const std::vector<int> &path, std::size_t v, double top = 0.9) {
  std::vector<std::vector<double>> rows;
  for (int id : path) {
    std::vector<double> r(v, (1.0 - top) / static_cast<double>(v - 1));
    r[static_cast<std::size_t>(id)] = top;
    rows.push_back(r);
  }
  return FromProbs(rows);
}

Vocabulary Ab() { return Vocabulary::FromListing({"<blank>", "a", "b"}); }

void Renormalize(std::span<double> row) {
  double z = 0.0;
  for (double v : row) z += std::exp(v);
  for (double &v : row) v -= std::log(z);
}

std::vector<int> RandomTarget(std::size_t len, std::size_t v, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> pick(1, static_cast<int>(v) - 1);
  std::vector<int> t;
  for (std::size_t i = 0; i < len; ++i) t.push_back(pick(rng));
  return t;
}

}  // namespace

TEST_CASE("ctc_loss examples") {
  const std::vector<int> a = {1};
  CHECK(CtcLoss(FromProbs({{0.4, 0.6}}), a).loss == doctest::Approx(-std::log(0.6)));
  CHECK(CtcLoss(FromProbs({{0.4, 0.6}}), a).loss == doctest::Approx(0.5108).epsilon(1e-4));
  const Matrix half = FromProbs({{0.5, 0.5}, {0.5, 0.5}});
  CHECK(CtcLoss(half, a).loss == doctest::Approx(-std::log(0.75)));
  CHECK(CtcLoss(half, a).loss == doctest::Approx(0.2877).epsilon(1e-4));
  const std::vector<int> aa = {1, 1};
  const CtcLossResult impossible = CtcLoss(half, aa);
  CHECK(std::isinf(impossible.loss));
  CHECK(impossible.loss > 0);
  for (double g : impossible.grad.data()) CHECK(g == 0.0);
  CHECK(CtcMinFrames(aa) == 3);
  // An empty target is the all-blank path.
  CHECK(CtcLoss(half, std::vector<int>{}).loss == doctest::Approx(-std::log(0.25)));
}

TEST_CASE("ctc_loss errors") {
  const Matrix m = FromProbs({{0.5, 0.5}});
  try {
    CtcLoss(m, std::vector<int>{0});
    FAIL("expected BlankInTarget");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kBlankInTarget);
  }
  try {
    CtcLoss(m, std::vector<int>{2});
    FAIL("expected VocabOverflow");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kVocabOverflow);
  }
}

TEST_CASE("ctc_loss matches path enumeration") {
  std::mt19937_64 rng(1);
  int checked = 0;
  for (std::size_t t = 1; t <= 6; ++t)
    for (std::size_t v = 2; v <= 4; ++v)
      for (std::size_t len = 0; len <= 3; ++len)
        for (int rep = 0; rep < 3; ++rep) {
          const Matrix m = oracle::RandomLogprobs(t, v, rng);
          const std::vector<int> target = RandomTarget(len, v, rng);
          const double expected = oracle::BruteForceCtcLoss(m, target);
          const double got = CtcLoss(m, target).loss;
          if (std::isinf(expected)) {
            CHECK(std::isinf(got));
          } else {
            CHECK(std::abs(got - expected) < 1e-6);
          }
          ++checked;
        }
  CHECK(checked == 6 * 3 * 4 * 3);
}

TEST_CASE("ctc_loss gradient matches finite differences") {
  std::mt19937_64 rng(2);
  const double eps = 1e-4;
  for (int instance = 0; instance < 24; ++instance) {
    const std::size_t t_max = 3 + instance % 5, v = 2 + instance % 4;
    const Matrix m = oracle::RandomLogprobs(t_max, v, rng, 1.0);
    std::vector<int> target = RandomTarget(1 + instance % 3, v, rng);
    if (CtcMinFrames(target) > t_max) target.resize(1);
    const CtcLossResult r = CtcLoss(m, target);
    for (std::size_t t = 0; t < t_max; ++t) {
      double row_sum = 0.0;
      for (std::size_t k = 0; k < v; ++k) row_sum += r.grad(t, k);
      for (std::size_t k = 0; k < v; ++k) {
        Matrix plus = m, minus = m;
        plus(t, k) += eps;
        minus(t, k) -= eps;
        Renormalize(plus.row(t));
        Renormalize(minus.row(t));
        const double fd = (CtcLoss(plus, target).loss - CtcLoss(minus, target).loss) / (2 * eps);
        // Perturbing one score and renormalizing moves the whole row.
        const double analytic = r.grad(t, k) - std::exp(m(t, k)) * row_sum;
        const double rel = std::abs(fd - analytic) / std::max(std::abs(analytic), 1e-8);
        CHECK(rel < 1e-4);
      }
    }
  }
}

TEST_CASE("ctc_loss is monotone in target mass") {
  // Scaling up every symbol that some valid alignment emits at frame t
  // multiplies each alignment's probability by at least one.
  std::mt19937_64 rng(3);
  for (int instance = 0; instance < 40; ++instance) {
    Matrix m = oracle::RandomLogprobs(4, 3, rng);
    const std::vector<int> target = instance % 2 ? std::vector<int>{1, 2} : std::vector<int>{1};
    const std::size_t t = instance % 4;
    std::vector<bool> compatible(3, false);
    oracle::ForEachPath(m, [&](const std::vector<int> &path, double) {
      if (oracle::Collapse(path) == target) compatible[static_cast<std::size_t>(path[t])] = true;
    });
    const double before = CtcLoss(m, target).loss;
    for (std::size_t k = 0; k < 3; ++k)
      if (compatible[k]) m(t, k) += 0.5;
    Renormalize(m.row(t));
    CHECK(CtcLoss(m, target).loss <= before + 1e-12);
  }
}

TEST_CASE("greedy_decode examples") {
  const Vocabulary v = Ab();
  CHECK(GreedyDecode(PathFrames({1, 1, 0, 2, 2}, 3), v) == "ab");
  CHECK(GreedyDecode(PathFrames({1, 0, 1}, 3), v) == "aa");
  CHECK(GreedyDecode(PathFrames({0, 0, 0}, 3), v) == "");
  CHECK_THROWS_AS(GreedyDecode(PathFrames({0}, 2), v), Error);
}

TEST_CASE("beam width 1 equals greedy") {
  std::mt19937_64 rng(4);
  const Vocabulary v = Vocabulary::FromListing({"<blank>", " ", "a", "b", "c"});
  DecoderConfig config;
  config.beam_width = 1;
  for (int i = 0; i < 200; ++i) {
    const Matrix m = oracle::RandomLogprobs(1 + i % 30, v.size(), rng, 1.5);
    const auto hyps = PrefixBeamSearch(m, v, config);
    REQUIRE(hyps.size() == 1);
    CHECK(hyps[0].text == GreedyDecode(m, v));
  }
  // The counterexample for prefix-level pruning: "a" then "b" is greedy.
  const Matrix tricky = FromProbs({{0.4, 0.6, 0.0001}, {0.34, 0.30, 0.36}});
  CHECK(PrefixBeamSearch(tricky, Ab(), config)[0].text == GreedyDecode(tricky, Ab()));
}

TEST_CASE("wide beam finds the most probable label sequence") {
  std::mt19937_64 rng(5);
  DecoderConfig config;
  config.beam_width = 1000;
  config.n_best = 1000;
  config.token_min_logp = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100; ++i) {
    const std::size_t t = 1 + i % 4, vsize = 2 + i % 2;
    const Vocabulary v = vsize == 2 ? Vocabulary::FromListing({"<blank>", "a"}) : Ab();
    const Matrix m = oracle::RandomLogprobs(t, vsize, rng);
    const auto mass = oracle::LabelSequenceMass(m);
    std::vector<int> best;
    double best_p = -1.0;
    for (const auto &[seq, p] : mass)
      if (p > best_p) {
        best_p = p;
        best = seq;
      }
    const auto hyps = PrefixBeamSearch(m, v, config);
    CHECK(hyps[0].labels == best);
    CHECK(hyps[0].acoustic_logp == doctest::Approx(std::log(best_p)).epsilon(1e-9));
    // With nothing pruned every sequence's mass is exact.
    CHECK(hyps.size() == mass.size());
    for (const auto &h : hyps) CHECK(std::exp(h.acoustic_logp) == doctest::Approx(mass.at(h.labels)));
  }
}

TEST_CASE("shallow fusion flips an acoustically close word") {
  const Vocabulary v = Vocabulary::FromListing({"<blank>", " ", "a", "c", "h", "o", "t"});
  const NGramModel lm = ReadArpa(
      "\\data\\\nngram 1=7\nngram 2=2\n\n\\1-grams:\n"
      "-2.0\t<unk>\n-99\t<s>\t0.0\n-0.5\tcat\t0.0\n-1.0\that\n-1.0\thot\n-1.0\t</s>\n-1.0\tdog\n"
      "\n\\2-grams:\n-0.1\tcat hat\n-1.0\tcat hot\n\n\\end\\\n");
  // c a t _ h {o .55 | a .45} t
  auto frame = [&](std::vector<std::pair<char32_t, double>> mass) {
    std::vector<double> row(v.size(), 1e-4);
    double rest = 1.0 - 1e-4 * (v.size() - mass.size());
    for (auto [sym, p] : mass) row[static_cast<std::size_t>(*v.IndexOf(sym))] = p * rest;
    return row;
  };
  const Matrix m = FromProbs({frame({{U'c', 1}}), frame({{U'a', 1}}), frame({{U't', 1}}),
                              frame({{U' ', 1}}), frame({{U'h', 1}}),
                              frame({{U'o', 0.55}, {U'a', 0.45}}), frame({{U't', 1}})});
  DecoderConfig config;
  config.lm_weight = 0.5;
  config.word_bonus = 0.0;
  const double acoustic_margin = std::log(0.55 / 0.45);
  const double lm_margin = lm.ScoreWord("hat", {"cat"}) - lm.ScoreWord("hot", {"cat"});
  REQUIRE(acoustic_margin < config.lm_weight * lm_margin);
  CHECK(PrefixBeamSearch(m, v, config)[0].text == "cat hot");
  CHECK(GreedyDecode(m, v) == "cat hot");
  const auto fused = PrefixBeamSearch(m, v, config, &lm);
  CHECK(fused[0].text == "cat hat");
  CHECK(fused[0].word_count == 2);
  CHECK(fused[0].lm_logp ==
        doctest::Approx(lm.ScoreWord("cat", {"<s>"}) + lm.ScoreWord("hat", {"<s>", "cat"})));
}

TEST_CASE("hypothesis scores are consistent") {
  std::mt19937_64 rng(6);
  const Vocabulary v = Vocabulary::FromListing({"<blank>", " ", "a", "b"});
  const NGramModel lm = ReadArpa(
      "\\data\\\nngram 1=5\n\n\\1-grams:\n-1.5\t<unk>\n-99\t<s>\n-0.3\ta\n-0.6\tb\n-0.9\t</s>\n\n\\end\\\n");
  DecoderConfig config;
  config.n_best = 5;
  config.beam_width = 16;
  config.lm_weight = 0.7;
  config.word_bonus = 0.4;
  for (int i = 0; i < 20; ++i) {
    const Matrix m = oracle::RandomLogprobs(12, v.size(), rng, 1.5);
    const auto hyps = PrefixBeamSearch(m, v, config, &lm);
    for (std::size_t j = 0; j < hyps.size(); ++j) {
      const Hypothesis &h = hyps[j];
      CHECK(h.combined_score == doctest::Approx(h.acoustic_logp + 0.7 * h.lm_logp +
                                                0.4 * h.word_count));
      if (j > 0) CHECK(hyps[j - 1].combined_score >= h.combined_score);
    }
    // Zero weights reproduce the LM-free ranking.
    DecoderConfig zero = config;
    zero.lm_weight = 0.0;
    zero.word_bonus = 0.0;
    CHECK(PrefixBeamSearch(m, v, zero, &lm)[0].text == PrefixBeamSearch(m, v, config)[0].text);
    // Shifting a frame's unnormalized scores changes nothing.
    Matrix shifted = m;
    for (double &x : shifted.row(i % 12)) x += 3.25;
    Renormalize(shifted.row(i % 12));
    const auto again = PrefixBeamSearch(shifted, v, config, &lm);
    REQUIRE(again.size() == hyps.size());
    for (std::size_t j = 0; j < hyps.size(); ++j) CHECK(again[j].text == hyps[j].text);
    // Deterministic.
    CHECK(PrefixBeamSearch(m, v, config, &lm)[0].combined_score == hyps[0].combined_score);
  }
}

TEST_CASE("decoder configuration errors") {
  const Matrix m = PathFrames({1}, 3);
  DecoderConfig config;
  config.beam_width = 0;
  CHECK_THROWS_AS(PrefixBeamSearch(m, Ab(), config), Error);
  config.beam_width = 2;
  config.n_best = 3;
  CHECK_THROWS_AS(PrefixBeamSearch(m, Ab(), config), Error);
  const NGramModel lm = ReadArpa("\\data\\\nngram 1=1\n\n\\1-grams:\n-1\t<unk>\n\n\\end\\\n");
  try {
    PrefixBeamSearch(m, Ab(), DecoderConfig{}, &lm);
    FAIL("expected NoSpaceSymbol");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kNoSpaceSymbol);
  }
  CHECK(PrefixBeamSearch(Matrix(0, 3), Ab(), DecoderConfig{})[0].text.empty());
}
