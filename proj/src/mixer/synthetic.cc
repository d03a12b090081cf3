// src/mixer/synthetic.cc

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

#include "cstk/mixer/synthetic.h"

#include <cmath>
#include <optional>
#include <random>

#include "cstk/base/error.h"
#include "cstk/base/utf8.h"

namespace cstk {

namespace {

constexpr int kLanguages = 2;
constexpr int kAlphabet = 5;

char32_t Letter(int language, int i) { return static_cast<char32_t>(U'a' + language * kAlphabet + i); }

// One log-probability row of a source for a frame whose truth is
// `symbol` (kBlank for a blank frame).
std::vector<double> SourceRow(char32_t symbol, const Vocabulary &vocab,
                              double accuracy) {
  const std::size_t v = vocab.size();
  std::vector<double> row(v, std::log(1.0 / static_cast<double>(v)));
  std::optional<int> index =
      symbol == Vocabulary::kBlank ? std::optional<int>(0) : vocab.IndexOf(symbol);
  if (!index) return row;
  const double rest = std::log((1.0 - accuracy) / static_cast<double>(v - 1));
  for (double &x : row) x = rest;
  row[static_cast<std::size_t>(*index)] = std::log(accuracy);
  return row;
}

}  // namespace

Vocabulary SyntheticSourceVocab(int language) {
  std::vector<char32_t> symbols;
  for (int i = 0; i < kAlphabet; ++i) symbols.push_back(Letter(language, i));
  return Vocabulary::FromSymbols(symbols);
}

Vocabulary SyntheticUnionVocab() {
  std::vector<char32_t> symbols;
  for (int l = 0; l < kLanguages; ++l)
    for (int i = 0; i < kAlphabet; ++i) symbols.push_back(Letter(l, i));
  return Vocabulary::FromSymbols(symbols);
}

std::vector<SyntheticUtterance> GenerateSynthetic(std::size_t count, std::uint64_t seed,
                                                  const SyntheticConfig &config) {
  if (config.min_symbols < 1 || config.max_symbols < config.min_symbols ||
      config.min_frames_per_symbol < 1 ||
      config.max_frames_per_symbol < config.min_frames_per_symbol ||
      !(config.accuracy > 0.0 && config.accuracy < 1.0) ||
      !(config.switch_probability >= 0.0 && config.switch_probability <= 1.0))
    throw Error(ErrorKind::kInvalidConfig, "bad synthetic generator settings");
  const std::vector<Vocabulary> vocabs = {SyntheticSourceVocab(0), SyntheticSourceVocab(1)};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(config.min_symbols, config.max_symbols);
  std::uniform_int_distribution<int> duration(config.min_frames_per_symbol,
                                              config.max_frames_per_symbol);
  std::uniform_int_distribution<int> letter(0, kAlphabet - 1);
  std::uniform_int_distribution<int> first_language(0, kLanguages - 1);
  std::bernoulli_distribution switch_language(config.switch_probability);

  std::vector<SyntheticUtterance> out;
  for (std::size_t u = 0; u < count; ++u) {
    std::vector<char32_t> frames = {Vocabulary::kBlank};
    std::u32string text;
    int language = first_language(rng);
    const int n = length(rng);
    for (int i = 0; i < n; ++i) {
      if (i > 0 && switch_language(rng)) language = 1 - language;
      const char32_t c = Letter(language, letter(rng));
      text.push_back(c);
      const int d = duration(rng);
      for (int k = 0; k < d; ++k) frames.push_back(c);
      frames.push_back(Vocabulary::kBlank);
    }
    SyntheticUtterance utt;
    utt.text = EncodeUtf8(text);
    for (int l = 0; l < kLanguages; ++l) {
      Posteriorgram p;
      p.vocab = vocabs[static_cast<std::size_t>(l)];
      p.frame_rate_hz = config.frame_rate_hz;
      p.frames = Matrix(frames.size(), p.vocab.size());
      for (std::size_t t = 0; t < frames.size(); ++t) {
        const std::vector<double> row = SourceRow(frames[t], p.vocab, config.accuracy);
        std::copy(row.begin(), row.end(), p.frames.row(t).begin());
      }
      utt.sources.push_back(std::move(p));
    }
    out.push_back(std::move(utt));
  }
  return out;
}

}  // namespace cstk
