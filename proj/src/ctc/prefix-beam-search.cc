// src/ctc/prefix-beam-search.cc

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
#include <limits>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cstk/base/error.h"
#include "cstk/base/utf8.h"
#include "cstk/ctc/decoder.h"
#include "cstk/kernels/kernels.h"

namespace cstk {

void ValidateDecoderConfig(const DecoderConfig &config) {
  if (config.beam_width < 1) throw Error(ErrorKind::kInvalidConfig, "beam_width must be >= 1");
  if (config.n_best < 1 || config.n_best > config.beam_width)
    throw Error(ErrorKind::kInvalidConfig, "n_best must lie in [1, beam_width]");
}

namespace {

constexpr int kNoLabel = -1;
constexpr int kEndsInBlank = 0;
constexpr int kEndsInLabel = 1;

// One prefix. Nodes form a trie and are only created for beam survivors.
struct Node {
  int parent = -1;
  int label = kNoLabel;
  std::vector<std::pair<int, int>> children;  // (label, node)
  std::string partial;                        // characters of the unfinished word
  std::vector<std::string> history;           // last order-1 completed words
  double lm_logp = 0.0;
  int words = 0;

  int Child(int l) const {
    for (const auto &[cl, id] : children)
      if (cl == l) return id;
    return -1;
  }
};

// A beam member or candidate: prefix `node` extended by `label` (kNoLabel for
// none), with its alignments ending as `ending`.
struct Entry {
  int node = 0;
  int label = kNoLabel;
  int ending = kEndsInBlank;
  double logp = -std::numeric_limits<double>::infinity();
  double lm_logp = 0.0;
  int words = 0;
};

struct EntryKeyHash {
  std::size_t operator()(const std::tuple<int, int, int> &k) const {
    const auto [n, l, e] = k;
    return std::hash<long long>()((static_cast<long long>(n) << 21) ^
                                  (static_cast<long long>(l + 1) << 1) ^ e);
  }
};

class BeamSearch {
 public:
  BeamSearch(const Matrix &logprobs, const Vocabulary &vocab, const DecoderConfig &config,
             const NGramModel *lm)
      : logprobs_(logprobs), vocab_(vocab), config_(config), lm_(lm) {
    alpha_ = lm ? config.lm_weight : 0.0;
    beta_ = lm ? config.word_bonus : 0.0;
    if (lm) space_ = *vocab.space_index();
    nodes_.emplace_back();
  }

  std::vector<Hypothesis> Run() {
    std::vector<Entry> beam = {Entry{0, kNoLabel, kEndsInBlank, 0.0, 0.0, 0}};
    for (std::size_t t = 0; t < logprobs_.rows(); ++t) beam = Step(beam, t);
    return Finish(beam);
  }

 private:
  double Score(const Entry &e) const { return e.logp + alpha_ * e.lm_logp + beta_ * e.words; }

  std::vector<int> Labels(int node, int extra) const {
    std::vector<int> out;
    if (extra != kNoLabel) out.push_back(extra);
    for (int n = node; n > 0; n = nodes_[n].parent) out.push_back(nodes_[n].label);
    std::reverse(out.begin(), out.end());
    return out;
  }

  bool Before(const Entry &a, const Entry &b) const {
    const double sa = Score(a), sb = Score(b);
    if (sa != sb) return sa > sb;
    const std::vector<int> la = Labels(a.node, a.label), lb = Labels(b.node, b.label);
    if (la != lb) return la < lb;
    return a.ending < b.ending;
  }

  // LM state after appending `label` to `node`, without creating the node.
  void Extend(const Node &node, int label, double *lm_logp, int *words,
              std::string *partial, std::vector<std::string> *history) const {
    *lm_logp = node.lm_logp;
    *words = node.words;
    if (lm_ == nullptr) return;
    if (partial) *partial = node.partial;
    if (history) *history = node.history;
    if (label != space_) {
      if (partial) *partial += EncodeUtf8(vocab_.symbol(label));
      return;
    }
    if (node.partial.empty()) return;
    *lm_logp += lm_->ScoreWord(node.partial, node.history);
    *words += 1;
    if (partial) partial->clear();
    if (history) {
      history->push_back(node.partial);
      const auto keep = static_cast<std::size_t>(std::max(lm_->order() - 1, 0));
      if (history->size() > keep)
        history->erase(history->begin(),
                       history->end() - static_cast<std::ptrdiff_t>(keep));
    }
  }

  int Materialize(int node, int label) {
    if (label == kNoLabel) return node;
    const int existing = nodes_[node].Child(label);
    if (existing >= 0) return existing;
    Node child;
    child.parent = node;
    child.label = label;
    Extend(nodes_[node], label, &child.lm_logp, &child.words, &child.partial, &child.history);
    nodes_.push_back(std::move(child));
    const int id = static_cast<int>(nodes_.size()) - 1;
    nodes_[node].children.emplace_back(label, id);
    return id;
  }

  std::vector<Entry> Step(const std::vector<Entry> &beam, std::size_t t) {
    const std::span<const double> frame = logprobs_.row(t);
    const int best = static_cast<int>(kernels::Argmax(frame));
    std::vector<int> tokens;
    for (std::size_t k = 0; k < frame.size(); ++k)
      if (static_cast<int>(k) == best || frame[k] >= config_.token_min_logp)
        tokens.push_back(static_cast<int>(k));

    std::vector<Entry> cands;
    std::unordered_map<std::tuple<int, int, int>, std::size_t, EntryKeyHash> index;
    auto add = [&](int node, int label, int ending, double logp) {
      if (label != kNoLabel) {
        const int child = nodes_[node].Child(label);
        if (child >= 0) {
          node = child;
          label = kNoLabel;
        }
      }
      const auto key = std::make_tuple(node, label, ending);
      auto it = index.find(key);
      if (it != index.end()) {
        Entry &e = cands[it->second];
        e.logp = kernels::LogAdd(e.logp, logp);
        return;
      }
      Entry e{node, label, ending, logp, 0.0, 0};
      if (label == kNoLabel) {
        e.lm_logp = nodes_[node].lm_logp;
        e.words = nodes_[node].words;
      } else {
        Extend(nodes_[node], label, &e.lm_logp, &e.words, nullptr, nullptr);
      }
      index.emplace(key, cands.size());
      cands.push_back(e);
    };

    for (const Entry &e : beam) {
      const int last = nodes_[e.node].label;
      for (int k : tokens) {
        const double lp = e.logp + frame[static_cast<std::size_t>(k)];
        if (k == 0) {
          add(e.node, kNoLabel, kEndsInBlank, lp);
        } else if (k == last && e.ending == kEndsInLabel) {
          add(e.node, kNoLabel, kEndsInLabel, lp);
        } else {
          add(e.node, k, kEndsInLabel, lp);
        }
      }
    }

    const std::size_t keep = std::min(cands.size(), static_cast<std::size_t>(config_.beam_width));
    std::partial_sort(cands.begin(), cands.begin() + static_cast<std::ptrdiff_t>(keep), cands.end(),
                      [this](const Entry &a, const Entry &b) { return Before(a, b); });
    cands.resize(keep);
    for (Entry &e : cands) {
      e.node = Materialize(e.node, e.label);
      e.label = kNoLabel;
    }
    return cands;
  }

  std::vector<Hypothesis> Finish(const std::vector<Entry> &beam) {
    std::vector<Entry> merged;
    std::unordered_map<int, std::size_t> by_node;
    for (const Entry &e : beam) {
      auto [it, fresh] = by_node.emplace(e.node, merged.size());
      if (fresh) {
        merged.push_back(e);
        merged.back().ending = kEndsInBlank;
      } else {
        merged[it->second].logp = kernels::LogAdd(merged[it->second].logp, e.logp);
      }
    }
    for (Entry &e : merged) {
      if (lm_ == nullptr) continue;
      const Node &n = nodes_[e.node];
      std::vector<std::string> history = n.history;
      if (!n.partial.empty()) {
        e.lm_logp += lm_->ScoreWord(n.partial, history);
        e.words += 1;
        history.push_back(n.partial);
      }
      if (config_.score_end_of_sentence) e.lm_logp += lm_->ScoreWord(kEosToken, history);
    }
    std::sort(merged.begin(), merged.end(),
              [this](const Entry &a, const Entry &b) { return Before(a, b); });
    if (merged.size() > static_cast<std::size_t>(config_.n_best))
      merged.resize(static_cast<std::size_t>(config_.n_best));

    std::vector<Hypothesis> out;
    for (const Entry &e : merged) {
      Hypothesis h;
      h.labels = Labels(e.node, kNoLabel);
      h.text = DecodeLabels(h.labels, vocab_);
      h.acoustic_logp = e.logp;
      h.lm_logp = e.lm_logp;
      h.word_count = e.words;
      h.combined_score = Score(e);
      out.push_back(std::move(h));
    }
    return out;
  }

  const Matrix &logprobs_;
  const Vocabulary &vocab_;
  const DecoderConfig &config_;
  const NGramModel *lm_;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  int space_ = -1;
  std::vector<Node> nodes_;
};

}  // namespace

std::vector<Hypothesis> PrefixBeamSearch(const Matrix &logprobs, const Vocabulary &vocab,
                                         const DecoderConfig &config, const NGramModel *lm) {
  ValidateDecoderConfig(config);
  if (logprobs.cols() != vocab.size())
    throw Error(ErrorKind::kShapeMismatch, "frames have " + std::to_string(logprobs.cols()) +
                                               " columns, vocabulary has " +
                                               std::to_string(vocab.size()));
  if (lm != nullptr && !vocab.space_index())
    throw Error(ErrorKind::kNoSpaceSymbol, "an LM needs a space symbol to delimit words");
  return BeamSearch(logprobs, vocab, config, lm).Run();
}

}  // namespace cstk
