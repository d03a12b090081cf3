// tests/unit/metrics-test.cc

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
#include <random>
#include <string>
#include <vector>

#include "cstk/base/error.h"
#include "cstk/base/utf8.h"
#include "cstk/metrics/edit-distance.h"
#include "cstk/metrics/error-rates.h"
#include "cstk/metrics/judgments.h"
#include "doctest.h"
#include "oracles/edit-oracle.h"

using namespace cstk;

namespace {

std::vector<char32_t> Chars(std::string_view s) {
  const std::u32string u = DecodeUtf8(s);
  return {u.begin(), u.end()};
}

std::string RandomSentence(std::mt19937_64 &rng, int max_words) {
  static const std::vector<std::string> words = {"a", "bb", "ccc", "d", "ee", "fff", "g"};
  std::uniform_int_distribution<int> len(0, max_words);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::vector<std::string> out;
  for (int i = len(rng); i > 0; --i) out.push_back(words[pick(rng)]);
  return JoinStrings(out, " ");
}

std::vector<Judgment> Judge(const std::vector<std::tuple<std::string, std::string, bool>> &rows) {
  std::vector<Judgment> out;
  for (const auto &[item, who, ok] : rows) out.push_back({item, who, ok, "2024-01-01T00:00:00Z"});
  return out;
}

}  // namespace

TEST_CASE("edit_distance examples") {
  const AlignmentCounts same = EditDistance(Chars("abc"), Chars("abc"));
  CHECK(same == AlignmentCounts{0, 0, 0, 3});
  CHECK(EditDistance(Chars("kitten"), Chars("sitting")).distance() == 3);
  const AlignmentCounts ins = EditDistance(std::vector<std::string>{},
                                           std::vector<std::string>{"a", "b"});
  CHECK(ins.insertions == 2);
  CHECK(ins.distance() == 2);
  // "ab" -> "ba": two substitutions and a deletion plus an insertion both
  // cost two; fewer substitutions wins.
  const AlignmentCounts swap = EditDistance(Chars("ab"), Chars("ba"));
  CHECK(swap.distance() == 2);
  CHECK(swap.substitutions == 0);
  CHECK(swap.insertions == 1);
  CHECK(swap.deletions == 1);
}

TEST_CASE("edit_distance matches the oracles") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> len(0, 6), sym(0, 2);
  for (int i = 0; i < 500; ++i) {
    std::vector<int> a(len(rng)), b(len(rng)), c(len(rng));
    for (int &x : a) x = sym(rng);
    for (int &x : b) x = sym(rng);
    for (int &x : c) x = sym(rng);
    const AlignmentCounts ab = EditDistance(a, b);
    CHECK(ab.distance() == oracle::Levenshtein(a, b));
    const auto [d, s, ins] = oracle::BestAlignment(a, b);
    CHECK(ab.distance() == d);
    CHECK(ab.substitutions == s);
    CHECK(ab.insertions == ins);
    CHECK(ab.ref_length() == a.size());
    CHECK(ab.hits + ab.substitutions + ab.insertions == b.size());
    CHECK(EditDistance(a, a).distance() == 0);
    CHECK(EditDistance(b, a).distance() == ab.distance());
    CHECK(EditDistance(a, c).distance() <= ab.distance() + EditDistance(b, c).distance());
  }
}

TEST_CASE("wer and cer examples") {
  CHECK(WordErrorRate({"a b c"}, {"a b c"}).percent == 0.0);
  const ErrorRate w = WordErrorRate({"a b c"}, {"a x c d"});
  CHECK(w.percent == doctest::Approx(200.0 / 3.0));
  CHECK(w.counts.substitutions == 1);
  CHECK(w.counts.insertions == 1);
  // Spaces do not count for CER.
  CHECK(CharErrorRate({"ab cd"}, {"abcd"}).percent == 0.0);
  CHECK(CharErrorRate({"abcd"}, {"abxd"}).percent == doctest::Approx(25.0));
  // Normalization applies to both sides.
  CHECK(WordErrorRate({"Hello, <fr>Monde</fr>!"}, {"hello monde"}).percent == 0.0);
  CHECK_THROWS_AS(WordErrorRate({"", " "}, {"a", "b"}), Error);
  try {
    WordErrorRate({"", " "}, {"a", "b"});
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kEmptyReferenceCorpus);
  }
  CHECK_THROWS_AS(WordErrorRate({"a"}, {}), Error);
}

TEST_CASE("pooled rates match an independent computation") {
  std::mt19937_64 rng(2);
  std::vector<std::string> refs, hyps;
  for (int i = 0; i < 1000; ++i) {
    refs.push_back(RandomSentence(rng, 6));
    hyps.push_back(RandomSentence(rng, 6));
  }
  std::size_t wd = 0, wn = 0, cd = 0, cn = 0, wrong = 0;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const auto rw = SplitWhitespace(refs[i]), hw = SplitWhitespace(hyps[i]);
    wd += oracle::Levenshtein(rw, hw);
    wn += rw.size();
    std::string rc = refs[i], hc = hyps[i];
    rc.erase(std::remove(rc.begin(), rc.end(), ' '), rc.end());
    hc.erase(std::remove(hc.begin(), hc.end(), ' '), hc.end());
    cd += oracle::Levenshtein(std::vector<char>(rc.begin(), rc.end()),
                              std::vector<char>(hc.begin(), hc.end()));
    cn += rc.size();
    if (refs[i] != hyps[i]) ++wrong;
  }
  CHECK(WordErrorRate(refs, hyps).percent == doctest::Approx(100.0 * wd / wn).epsilon(1e-12));
  CHECK(CharErrorRate(refs, hyps).percent == doctest::Approx(100.0 * cd / cn).epsilon(1e-12));
  CHECK(SentenceErrorRate(refs, hyps) == doctest::Approx(100.0 * wrong / refs.size()));
  // Reordering the corpus changes nothing.
  std::vector<std::size_t> order(refs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::string> r2, h2;
  for (std::size_t i : order) {
    r2.push_back(refs[i]);
    h2.push_back(hyps[i]);
  }
  CHECK(WordErrorRate(r2, h2).percent == WordErrorRate(refs, hyps).percent);
  CHECK(CharErrorRate(r2, h2).percent == CharErrorRate(refs, hyps).percent);
}

TEST_CASE("ser examples") {
  CHECK(SentenceErrorRate({"a", "b", "c", "d"}, {"a", "b", "c", "d"}) == 0.0);
  CHECK(SentenceErrorRate({"a", "b", "c", "d"}, {"a", "b", "c", "x"}) == 25.0);
  CHECK_THROWS_AS(SentenceErrorRate({}, {}), Error);
}

TEST_CASE("human ser and agreement") {
  const std::vector<std::string> items = {"1", "2", "3", "4"};
  const auto j = Judge({{"1", "x", true}, {"1", "y", true}, {"2", "x", true}, {"2", "y", true},
                        {"3", "x", true}, {"3", "y", false}, {"4", "x", false}, {"4", "y", false}});
  CHECK(HumanSentenceErrorRate(j, items) == 50.0);
  CHECK(Agreement(j, items) == 75.0);
  std::vector<Judgment> swapped;
  for (std::size_t i = 0; i < j.size(); i += 2) {
    swapped.push_back(j[i + 1]);
    swapped.push_back(j[i]);
  }
  CHECK(Agreement(swapped, items) == 75.0);
  CHECK(HumanSentenceErrorRate(swapped, items) == 50.0);
  const auto all = Judge({{"1", "x", true}, {"1", "y", true}});
  CHECK(HumanSentenceErrorRate(all, {"1"}) == 0.0);
  // Missing and same-evaluator judgments are reported.
  try {
    HumanSentenceErrorRate(Judge({{"1", "x", true}, {"2", "x", true}, {"2", "x", false}}),
                           {"1", "2"});
    FAIL("expected IncompleteJudgments");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kIncompleteJudgments);
    CHECK(std::string(e.what()).find("1, 2") != std::string::npos);
  }
}
