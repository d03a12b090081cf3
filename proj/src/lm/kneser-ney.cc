// src/lm/kneser-ney.cc

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

#include "cstk/lm/kneser-ney.h"

#include <cmath>

#include "cstk/base/error.h"
#include "cstk/base/utf8.h"

namespace cstk {

NGramCounts CountNGrams(const std::vector<std::string> &sentences, int order) {
  if (order < 1) throw Error(ErrorKind::kInvalidConfig, "order must be at least 1");
  NGramCounts counts;
  counts.order = order;
  counts.raw.resize(static_cast<std::size_t>(order));
  for (const std::string &line : sentences) {
    const std::vector<std::string> tokens = SplitWhitespace(line);
    if (tokens.empty()) continue;
    ++counts.sentences;
    std::vector<WordId> padded = {WordTable::kBos};
    for (const std::string &t : tokens) padded.push_back(counts.words.Intern(t));
    padded.push_back(WordTable::kEos);
    for (int k = 1; k <= order; ++k) {
      for (std::size_t i = 0; i + static_cast<std::size_t>(k) <= padded.size(); ++i) {
        std::vector<WordId> g(padded.begin() + static_cast<std::ptrdiff_t>(i),
                              padded.begin() + static_cast<std::ptrdiff_t>(i) + k);
        ++counts.raw[static_cast<std::size_t>(k - 1)][g];
      }
    }
  }
  if (counts.sentences == 0) throw Error(ErrorKind::kEmptyCorpus, "no nonempty sentence");

  // N1+(. g): distinct left neighbours, read off the (k+1)-gram counts.
  counts.continuation.resize(static_cast<std::size_t>(order - 1));
  for (int k = 1; k < order; ++k) {
    CountTable &cont = counts.continuation[static_cast<std::size_t>(k - 1)];
    for (const auto &[g, c] : counts.raw[static_cast<std::size_t>(k)]) {
      ++cont[std::vector<WordId>(g.begin() + 1, g.end())];
    }
  }
  return counts;
}

namespace {

void CheckConfig(const KNConfig &config) {
  if (config.fixed_discount &&
      !(*config.fixed_discount > 0.0 && *config.fixed_discount < 1.0))
    throw Error(ErrorKind::kInvalidConfig, "discount must lie in (0, 1)");
  if (config.min_count < 1) throw Error(ErrorKind::kInvalidConfig, "min_count must be >= 1");
}

// Counts that enter the order-k estimate.
std::vector<CountTable> AdjustedCounts(const NGramCounts &counts, const KNConfig &config) {
  const int n = counts.order;
  std::vector<CountTable> adjusted(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const auto ki = static_cast<std::size_t>(k - 1);
    for (const auto &[g, c] : counts.raw[ki]) {
      if (k == 1 && g[0] == WordTable::kBos) continue;
      std::uint64_t a = c;
      if (k == n) {
        if (c < config.min_count) continue;
      } else if (g[0] != WordTable::kBos) {
        a = counts.continuation[ki].at(g);
      }
      adjusted[ki][g] = a;
    }
  }
  return adjusted;
}

double DiscountFor(const CountTable &adjusted, const KNConfig &config) {
  if (config.fixed_discount) return *config.fixed_discount;
  std::uint64_t n1 = 0, n2 = 0;
  for (const auto &[g, a] : adjusted) {
    if (a == 1) ++n1;
    if (a == 2) ++n2;
  }
  if (n1 == 0 || n2 == 0) return kFallbackDiscount;
  return static_cast<double>(n1) / static_cast<double>(n1 + 2 * n2);
}

struct ContextStats {
  double total = 0.0;     // sum of adjusted counts
  double distinct = 0.0;  // number of continuations
};

}  // namespace

std::vector<double> KneserNeyDiscounts(const NGramCounts &counts, const KNConfig &config) {
  CheckConfig(config);
  const std::vector<CountTable> adjusted = AdjustedCounts(counts, config);
  std::vector<double> out;
  for (const CountTable &t : adjusted) out.push_back(DiscountFor(t, config));
  return out;
}

NGramModel EstimateKneserNey(const NGramCounts &counts, const KNConfig &config) {
  CheckConfig(config);
  const int n = counts.order;
  const std::vector<CountTable> adjusted = AdjustedCounts(counts, config);
  std::vector<double> discount;
  for (const CountTable &t : adjusted) discount.push_back(DiscountFor(t, config));

  std::vector<std::string> warnings;
  std::size_t word_types = 0;
  for (const auto &[g, a] : adjusted[0])
    if (g[0] != WordTable::kEos) ++word_types;
  const bool degenerate = word_types <= 1;
  if (degenerate)
    warnings.push_back("DegenerateCounts: corpus has a single word type; unigram level is uniform");

  // Predictable vocabulary: every adjusted unigram plus <unk>.
  std::vector<WordId> vocab;
  for (const auto &[g, a] : adjusted[0]) vocab.push_back(g[0]);
  if (adjusted[0].count({WordTable::kUnk}) == 0) vocab.push_back(WordTable::kUnk);
  const double uniform = 1.0 / static_cast<double>(vocab.size());

  // Per-order context statistics (context = all but the last word).
  std::vector<std::map<std::vector<WordId>, ContextStats>> contexts(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    auto &ctx = contexts[static_cast<std::size_t>(k - 1)];
    for (const auto &[g, a] : adjusted[static_cast<std::size_t>(k - 1)]) {
      ContextStats &s = ctx[std::vector<WordId>(g.begin(), g.end() - 1)];
      s.total += static_cast<double>(a);
      s.distinct += 1.0;
    }
  }
  auto gamma = [&](int k, const std::vector<WordId> &h) {
    const auto &ctx = contexts[static_cast<std::size_t>(k - 1)];
    auto it = ctx.find(h);
    if (it == ctx.end()) return 1.0;
    return discount[static_cast<std::size_t>(k - 1)] * it->second.distinct / it->second.total;
  };

  // Linear probabilities, filled bottom-up.
  std::vector<std::map<std::vector<WordId>, double>> prob(static_cast<std::size_t>(n));
  {
    const ContextStats root = contexts[0].count({}) ? contexts[0].at({}) : ContextStats{};
    const double g0 = gamma(1, {});
    for (WordId w : vocab) {
      double p = uniform;
      if (!degenerate) {
        auto it = adjusted[0].find({w});
        const double a = it == adjusted[0].end() ? 0.0 : static_cast<double>(it->second);
        p = (a > 0 ? (a - discount[0]) / root.total : 0.0) + g0 * uniform;
      }
      prob[0][{w}] = p;
    }
  }
  for (int k = 2; k <= n; ++k) {
    const auto ki = static_cast<std::size_t>(k - 1);
    for (const auto &[g, a] : adjusted[ki]) {
      const std::vector<WordId> h(g.begin(), g.end() - 1);
      const ContextStats &s = contexts[ki].at(h);
      const std::vector<WordId> lower(g.begin() + 1, g.end());
      const double p_lower = prob[ki - 1].at(lower);
      prob[ki][g] = (static_cast<double>(a) - discount[ki]) / s.total + gamma(k, h) * p_lower;
    }
  }

  std::vector<NGramModel::Table> tables(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const auto ki = static_cast<std::size_t>(k - 1);
    for (const auto &[g, p] : prob[ki]) {
      NGramEntry e;
      e.log10_prob = std::log10(p);
      if (k < n) e.log10_backoff = std::log10(gamma(k + 1, g));
      tables[ki][g] = e;
    }
  }
  NGramEntry bos;
  bos.log10_prob = -99.0;
  if (n > 1) bos.log10_backoff = std::log10(gamma(2, {WordTable::kBos}));
  tables[0][{WordTable::kBos}] = bos;

  return NGramModel(n, counts.words, std::move(tables), std::move(warnings));
}

NGramModel TrainKneserNey(const std::vector<std::string> &sentences, const KNConfig &config) {
  return EstimateKneserNey(CountNGrams(sentences, config.order), config);
}

}  // namespace cstk
