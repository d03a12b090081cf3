// tests/acceptance/acceptance.cc

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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spdlog/spdlog.h"

#include "cstk/base/error.h"
#include "cstk/base/file-util.h"
#include "cstk/base/utf8.h"
#include "cstk/corpus/manifest.h"
#include "cstk/corpus/posteriorgram.h"
#include "cstk/corpus/tags.h"
#include "cstk/corpus/text-normalize.h"
#include "cstk/ctc/ctc-loss.h"
#include "cstk/ctc/decoder.h"
#include "cstk/evalsvc/campaign.h"
#include "cstk/evalsvc/eval-service.h"
#include "cstk/lm/arpa.h"
#include "cstk/lm/kneser-ney.h"
#include "cstk/metrics/error-rates.h"
#include "cstk/metrics/judgments.h"
#include "cstk/mixer/mixer-model.h"
#include "cstk/mixer/mixer-train.h"
#include "cstk/mixer/synthetic.h"
#include "cstk/mixer/union-vocab.h"
#include "cstk/selftrain/selftrain.h"
#include "oracles/ctc-oracle.h"
#include "oracles/edit-oracle.h"
#include "oracles/kn-oracle.h"
#include "oracles/random-text.h"

using namespace cstk;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Collects failed checks with a short description.
class Checks {
 public:
  void Expect(bool ok, const std::string &what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string Failures() const {
    return std::to_string(failed_) + " failed: " + JoinStrings(failures_, "; ");
  }
  Outcome Done(const std::string &detail) const {
    return ok() ? Outcome{true, detail} : Outcome{false, detail + "; " + Failures()};
  }

 private:
  std::vector<std::string> failures_;
  std::size_t failed_ = 0;
};

std::string Num(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string Sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

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

// ---------------------------------------------------------------------------

Outcome CtcOracle() {
  std::mt19937_64 rng(101);
  Checks c;
  double worst = 0.0;
  int cases = 0;
  for (std::size_t t = 1; t <= 6; ++t)
    for (std::size_t v = 2; v <= 4; ++v)
      for (std::size_t len = 0; len <= 3; ++len)
        for (int rep = 0; rep < 4; ++rep) {
          const Matrix m = oracle::RandomLogprobs(t, v, rng);
          const std::vector<int> target = RandomTarget(len, v, rng);
          const double expected = oracle::BruteForceCtcLoss(m, target);
          const double got = CtcLoss(m, target).loss;
          ++cases;
          if (std::isinf(expected)) {
            c.Expect(std::isinf(got), "unalignable target gave a finite loss");
            continue;
          }
          worst = std::max(worst, std::abs(got - expected));
          c.Expect(std::abs(got - expected) <= 1e-6, "loss differs at T=" + std::to_string(t));
        }
  c.Expect(cases >= 200, "too few cases");
  return c.Done(std::to_string(cases) + " cases, max |diff| " + Sci(worst));
}

Outcome CtcGradient() {
  std::mt19937_64 rng(102);
  Checks c;
  const double eps = 1e-4;
  double worst = 0.0;
  int entries = 0;
  const int instances = 24;
  for (int instance = 0; instance < instances; ++instance) {
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
        // The perturbation is followed by renormalization of the frame, so
        // the matching analytic derivative is the row-projected gradient.
        const double analytic = r.grad(t, k) - std::exp(m(t, k)) * row_sum;
        const double rel = std::abs(fd - analytic) / std::max(std::abs(analytic), 1e-8);
        worst = std::max(worst, rel);
        ++entries;
        c.Expect(rel <= 1e-4, "relative error " + std::to_string(rel));
      }
    }
  }
  return c.Done(std::to_string(instances) + " instances, " + std::to_string(entries) +
                " entries, max rel err " + Sci(worst));
}

Outcome DecoderExactness() {
  Checks c;
  std::mt19937_64 rng(103);
  DecoderConfig wide;
  wide.beam_width = 1000;
  wide.token_min_logp = -std::numeric_limits<double>::infinity();
  const int exact_cases = 150;
  for (int i = 0; i < exact_cases; ++i) {
    const std::size_t t = 1 + i % 4, vsize = 2 + i % 2;
    const Vocabulary v = vsize == 2 ? Vocabulary::FromListing({"<blank>", "a"})
                                    : Vocabulary::FromListing({"<blank>", "a", "b"});
    const Matrix m = oracle::RandomLogprobs(t, vsize, rng);
    std::vector<int> best;
    double best_p = -1.0;
    for (const auto &[seq, p] : oracle::LabelSequenceMass(m))
      if (p > best_p) {
        best_p = p;
        best = seq;
      }
    c.Expect(PrefixBeamSearch(m, v, wide)[0].labels == best, "wide beam missed the argmax");
  }
  DecoderConfig narrow;
  narrow.beam_width = 1;
  const Vocabulary v = Vocabulary::FromListing({"<blank>", " ", "a", "b", "c"});
  const int greedy_cases = 200;
  for (int i = 0; i < greedy_cases; ++i) {
    const Matrix m = oracle::RandomLogprobs(1 + i % 30, v.size(), rng, 1.5);
    c.Expect(PrefixBeamSearch(m, v, narrow)[0].text == GreedyDecode(m, v),
             "beam 1 differs from greedy");
  }
  return c.Done(std::to_string(exact_cases) + " exhaustive + " + std::to_string(greedy_cases) +
                " greedy instances");
}

Outcome LmFusion() {
  Checks c;
  const Vocabulary v = Vocabulary::FromListing({"<blank>", " ", "a", "c", "h", "o", "t"});
  const NGramModel lm = ReadArpa(
      "\\data\\\nngram 1=7\nngram 2=2\n\n\\1-grams:\n"
      "-2.0\t<unk>\n-99\t<s>\t0.0\n-0.5\tcat\t0.0\n-1.0\that\n-1.0\thot\n-1.0\t</s>\n-1.0\tdog\n"
      "\n\\2-grams:\n-0.1\tcat hat\n-1.0\tcat hot\n\n\\end\\\n");
  auto frame = [&](std::vector<std::pair<char32_t, double>> mass) {
    std::vector<double> row(v.size(), 1e-4);
    const double rest = 1.0 - 1e-4 * static_cast<double>(v.size() - mass.size());
    for (auto [sym, p] : mass) row[static_cast<std::size_t>(*v.IndexOf(sym))] = p * rest;
    return row;
  };
  const std::vector<std::vector<double>> rows = {
      frame({{U'c', 1}}), frame({{U'a', 1}}), frame({{U't', 1}}), frame({{U' ', 1}}),
      frame({{U'h', 1}}), frame({{U'o', 0.55}, {U'a', 0.45}}), frame({{U't', 1}})};
  Matrix m(rows.size(), v.size());
  for (std::size_t t = 0; t < rows.size(); ++t)
    for (std::size_t k = 0; k < v.size(); ++k) m(t, k) = std::log(rows[t][k]);
  DecoderConfig fused;
  fused.lm_weight = 0.5;
  fused.word_bonus = 0.0;
  const double acoustic_margin = std::log(0.55 / 0.45);
  const double lm_margin = lm.ScoreWord("hat", {"cat"}) - lm.ScoreWord("hot", {"cat"});
  c.Expect(acoustic_margin > 0, "acoustics must prefer hot");
  c.Expect(fused.lm_weight * lm_margin > acoustic_margin, "alpha * LM margin must exceed acoustics");
  const std::string with_lm = PrefixBeamSearch(m, v, fused, &lm)[0].text;
  DecoderConfig off = fused;
  off.lm_weight = 0.0;
  const std::string without = PrefixBeamSearch(m, v, off, &lm)[0].text;
  c.Expect(with_lm == "cat hat", "alpha 0.5 gave '" + with_lm + "'");
  c.Expect(without == "cat hot", "alpha 0 gave '" + without + "'");
  return c.Done("acoustic margin " + Num(acoustic_margin) + " < 0.5 x LM margin " +
                Num(fused.lm_weight * lm_margin) + "; alpha 0.5 -> '" + with_lm +
                "', alpha 0 -> '" + without + "'");
}

double WorstNormalization(const NGramModel &m) {
  const std::vector<WordId> vocab = m.PredictableWords();
  std::vector<std::vector<WordId>> contexts = {{}};
  for (int k = 1; k < m.order(); ++k)
    for (const auto &[g, e] : m.tables()[static_cast<std::size_t>(k - 1)])
      if (g.back() != WordTable::kEos) contexts.push_back(g);
  double worst = 0.0;
  for (const auto &h : contexts) {
    double sum = 0.0;
    for (WordId w : vocab) sum += std::pow(10.0, m.ScoreLog10(w, h));
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

Outcome KneserNey() {
  Checks c;
  const auto corpus = oracle::RandomSentences(1000, 30, 10, 104);
  double worst_norm = 0.0, worst_oracle = 0.0, worst_arpa = 0.0;
  int queries = 0;
  for (int order = 1; order <= 4; ++order) {
    const NGramModel m = TrainKneserNey(corpus, {order});
    const double norm = WorstNormalization(m);
    worst_norm = std::max(worst_norm, norm);
    c.Expect(norm <= 1e-6, "order " + std::to_string(order) + " does not normalize");

    const oracle::NaiveKneserNey naive(corpus, order);
    std::vector<std::string> words(naive.vocab().begin(), naive.vocab().end());
    words.push_back("never-seen");
    std::mt19937_64 rng(order);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<int> len(0, order - 1);
    for (int q = 0; q < 2500; ++q) {
      std::vector<std::string> ctx;
      const int n = len(rng);
      for (int i = 0; i < n; ++i) {
        const std::string &w = words[pick(rng)];
        ctx.push_back(w == "</s>" ? "w0" : w);
      }
      if (n < order - 1 && q % 2 == 0) ctx.insert(ctx.begin(), "<s>");
      const std::string &w = words[pick(rng)];
      const double diff = std::abs(m.ScoreWord(w, ctx) - naive.LogProb(w, ctx));
      worst_oracle = std::max(worst_oracle, diff);
      ++queries;
      c.Expect(diff <= 1e-9, "score_word differs from the oracle");
    }

    const NGramModel back = ReadArpa(WriteArpa(m));
    for (std::size_t k = 0; k < m.tables().size(); ++k)
      for (const auto &[g, e] : m.tables()[k]) {
        std::vector<WordId> ids;
        for (WordId id : g) ids.push_back(back.words().Find(m.words().Word(id)));
        const NGramEntry *r = back.Find(ids);
        if (!r) {
          c.Expect(false, "n-gram lost in ARPA round trip");
          continue;
        }
        worst_arpa = std::max({worst_arpa, std::abs(r->log10_prob - e.log10_prob),
                               std::abs(r->log10_backoff - e.log10_backoff)});
      }
  }
  c.Expect(worst_arpa <= 1e-4, "ARPA round trip moved a score");
  return c.Done("max |sum-1| " + Sci(worst_norm) + ", " + std::to_string(queries) +
                " oracle queries max |diff| " + Sci(worst_oracle) +
                ", ARPA max |diff| " + Sci(worst_arpa));
}

// ---------------------------------------------------------------------------
// Synthetic code-switching data shared by the mixer and self-training
// criteria. Source posteriorgrams live on disk, as frozen model outputs do.

constexpr std::uint64_t kMixerSeed = 7;

struct SyntheticSet {
  fs::path root;
  std::map<std::string, std::string> truth;
  Manifest train, dev, test, unlabeled;
  FeatureLookup features;
  Vocabulary union_vocab;

  Manifest Make(const std::string &prefix, std::size_t n, std::uint64_t seed, Split split) {
    Manifest m;
    std::size_t i = 0;
    for (const SyntheticUtterance &s : GenerateSynthetic(n, seed)) {
      Utterance u;
      u.id = prefix + std::to_string(i++);
      u.split = split;
      if (split != Split::kUnlabeled) u.text = s.text;
      truth[u.id] = s.text;
      for (std::size_t k = 0; k < s.sources.size(); ++k)
        SavePosteriorgram(root / ("src" + std::to_string(k)) / (u.id + ".pgrm"), s.sources[k]);
      m.push_back(u);
    }
    return m;
  }

  std::uint64_t SourceChecksum() const {
    std::uint64_t h = 1469598103934665603ull;
    std::vector<fs::path> files;
    for (const auto &e : fs::recursive_directory_iterator(root))
      if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const fs::path &f : files)
      for (unsigned char ch : f.string() + ReadFile(f)) {
        h ^= ch;
        h *= 1099511628211ull;
      }
    return h;
  }
};

SyntheticSet &Synthetic() {
  static SyntheticSet set = [] {
    SyntheticSet s;
    s.root = fs::temp_directory_path() / ("cstk-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(s.root);
    fs::create_directories(s.root / "src0");
    fs::create_directories(s.root / "src1");
    s.train = s.Make("train", 200, 1, Split::kTrain);
    s.dev = s.Make("dev", 50, 2, Split::kDev);
    s.test = s.Make("test", 50, 3, Split::kTest);
    s.unlabeled = s.Make("unl", 200, 4, Split::kUnlabeled);
    const Vocabulary a = SyntheticSourceVocab(0), b = SyntheticSourceVocab(1);
    s.union_vocab = BuildUnion({a, b}).union_vocab;
    s.features = SourceFeatures({DirectoryLookup(s.root / "src0", a),
                                 DirectoryLookup(s.root / "src1", b)});
    return s;
  }();
  return set;
}

MixerTrainConfig AcceptanceMixerConfig() {
  MixerTrainConfig config;
  config.hidden = 32;
  config.learning_rate = 1e-2;
  config.max_epochs = 20;
  config.patience = 5;
  config.seed = kMixerSeed;
  return config;
}

double HeldOutCer(const MixerParams &params) {
  SyntheticSet &s = Synthetic();
  std::vector<std::string> refs, hyps;
  for (const Utterance &u : s.test) {
    refs.push_back(s.truth.at(u.id));
    hyps.push_back(GreedyDecode(MixerForward(params, s.features(u)), s.union_vocab));
  }
  return CharErrorRate(refs, hyps).percent;
}

std::optional<MixerParams> g_supervised;

Outcome MixerExperiment() {
  Checks c;
  SyntheticSet &s = Synthetic();
  c.Expect(s.union_vocab == SyntheticUnionVocab(), "union vocabulary of the sources");

  double source_cer[2];
  for (int k = 0; k < 2; ++k) {
    const Vocabulary v = SyntheticSourceVocab(k);
    std::vector<std::string> refs, hyps;
    for (const Utterance &u : s.test) {
      refs.push_back(s.truth.at(u.id));
      hyps.push_back(GreedyDecode(
          LoadPosteriorgram(s.root / ("src" + std::to_string(k)) / (u.id + ".pgrm")).frames, v));
    }
    source_cer[k] = CharErrorRate(refs, hyps).percent;
    c.Expect(source_cer[k] >= 30.0, "source " + std::to_string(k) + " alone is too good");
  }

  const std::uint64_t before = s.SourceChecksum();
  MixerTarget first(s.features, s.union_vocab, AcceptanceMixerConfig(), s.dev);
  first.Retrain(s.train, RetrainMode::kFromScratch);
  MixerTarget second(s.features, s.union_vocab, AcceptanceMixerConfig(), s.dev);
  second.Retrain(s.train, RetrainMode::kFromScratch);
  c.Expect(WriteMixer(first.params()) == WriteMixer(second.params()),
           "two runs with the same seed differ");
  c.Expect(s.SourceChecksum() == before, "source artifacts changed during training");

  const double cer = HeldOutCer(first.params());
  c.Expect(cer <= 5.0, "mixer CER " + Num(cer, 2) + "% above 5%");
  g_supervised = first.params();
  return c.Done("mixer CER " + Num(cer, 2) + "% vs sources " + Num(source_cer[0], 1) + "% / " +
                Num(source_cer[1], 1) + "%, " + std::to_string(first.last_training().best_epoch) +
                " epochs to best, seed " + std::to_string(kMixerSeed) +
                ", deterministic, source checksum unchanged");
}

std::vector<std::string> TopicSentences(const std::vector<std::string> &words, std::size_t n,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> len(3, 8);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> s;
    for (int k = len(rng); k > 0; --k) s.push_back(words[pick(rng)]);
    out.push_back(JoinStrings(s, " "));
  }
  return out;
}

bool Reconciles(const SelfTrainReport &r, std::size_t labeled, std::size_t unlabeled,
                Checks *c) {
  const PseudoLabelResult &p = r.pseudo;
  const bool ok = p.input == unlabeled &&
                  p.input == p.labeled.size() + p.dropped_low_confidence + p.dropped_empty +
                                 p.failed.size() &&
                  r.labeled == labeled && r.merged == labeled + p.labeled.size();
  c->Expect(ok, r.target + " report counts do not reconcile");
  // The serialized records carry the same numbers.
  const std::string records = r.Records();
  c->Expect(records.find("\"input\":" + std::to_string(p.input)) != std::string::npos &&
                records.find("\"merged\":" + std::to_string(r.merged)) != std::string::npos,
            r.target + " records disagree with the report");
  return ok;
}

Outcome SelfTraining() {
  Checks c;
  // LM: labeled text from one topic, unlabeled and dev text from another.
  const std::vector<std::string> sport = {"match", "goal", "team", "coach", "win", "the", "a"};
  const std::vector<std::string> food = {"bread", "salt", "oil", "cook", "eat", "the", "a"};
  Manifest labeled, unlabeled;
  std::map<std::string, std::string> truth;
  int n = 0;
  for (const std::string &text : TopicSentences(sport, 300, 11)) {
    Utterance u;
    u.id = "l" + std::to_string(n++);
    u.text = text;
    labeled.push_back(u);
  }
  for (const std::string &text : TopicSentences(food, 300, 12)) {
    Utterance u;
    u.id = "u" + std::to_string(n++);
    u.split = Split::kUnlabeled;
    truth[u.id] = text;
    unlabeled.push_back(u);
  }
  KNConfig kn;
  kn.order = 3;
  LmTarget lm(kn, TopicSentences(food, 100, 13));
  const SelfTrainReport lm_report =
      SelfTrainRound(labeled, unlabeled, OracleTranscriber(truth), lm, {});
  c.Expect(lm_report.after < lm_report.before, "dev perplexity did not drop");
  Reconciles(lm_report, labeled.size(), unlabeled.size(), &c);

  // Mixer: pseudo-labels from the supervised synthetic mixer.
  SyntheticSet &s = Synthetic();
  if (!g_supervised) {
    MixerTarget sup(s.features, s.union_vocab, AcceptanceMixerConfig(), s.dev);
    sup.Retrain(s.train, RetrainMode::kFromScratch);
    g_supervised = sup.params();
  }
  DecoderConfig greedy;
  greedy.beam_width = 1;
  const MixerTranscriber transcriber(s.features, *g_supervised, s.union_vocab, greedy);
  MixerTarget target(s.features, s.union_vocab, AcceptanceMixerConfig(), s.dev, *g_supervised);
  SelfTrainConfig config;
  config.mode = RetrainMode::kFromScratch;
  const SelfTrainReport mixer_report =
      SelfTrainRound(s.train, s.unlabeled, transcriber, target, config);
  Reconciles(mixer_report, s.train.size(), s.unlabeled.size(), &c);
  const double supervised = HeldOutCer(*g_supervised);
  const double self_trained = HeldOutCer(target.params());
  c.Expect(self_trained <= 1.2 * supervised,
           "self-trained CER " + Num(self_trained, 2) + "% > 1.2 x " + Num(supervised, 2) + "%");
  return c.Done("LM dev ppl " + Num(lm_report.before, 2) + " -> " + Num(lm_report.after, 2) +
                "; mixer held-out CER supervised " + Num(supervised, 2) + "% / self-trained " +
                Num(self_trained, 2) + "% with " + std::to_string(mixer_report.pseudo.labeled.size()) +
                " pseudo-labels; counts reconcile");
}

std::string RandomWords(std::mt19937_64 &rng, int max_words) {
  static const std::vector<std::string> words = {"a", "bb", "ccc", "d", "ee", "fff", "g"};
  std::uniform_int_distribution<int> len(0, max_words);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::vector<std::string> out;
  for (int i = len(rng); i > 0; --i) out.push_back(words[pick(rng)]);
  return JoinStrings(out, " ");
}

Outcome Metrics() {
  Checks c;
  std::mt19937_64 rng(108);
  std::vector<std::string> refs, hyps;
  for (int i = 0; i < 1000; ++i) {
    std::string r = RandomWords(rng, 7);
    if (r.empty()) r = "a";
    refs.push_back(r);
    hyps.push_back(rng() % 4 == 0 ? r : RandomWords(rng, 7));
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
    if (rw != hw) ++wrong;
  }
  const double wer = WordErrorRate(refs, hyps).percent, cer = CharErrorRate(refs, hyps).percent;
  const double ser = SentenceErrorRate(refs, hyps);
  c.Expect(std::abs(wer - 100.0 * wd / wn) < 1e-9, "WER differs from the DP oracle");
  c.Expect(std::abs(cer - 100.0 * cd / cn) < 1e-9, "CER differs from the DP oracle");
  c.Expect(std::abs(ser - 100.0 * wrong / refs.size()) < 1e-9, "SER differs from the oracle");

  // 100 items: 40 exact, 30 spelling variants that annotators accept, 30
  // real errors that they reject (with 6 disagreements on each side).
  std::vector<std::string> r2, h2, items;
  std::vector<Judgment> judgments;
  for (int i = 0; i < 100; ++i) {
    const std::string id = "i" + std::to_string(i);
    items.push_back(id);
    r2.push_back("ya khouya chbik");
    bool a = true, b = true;
    if (i < 40) {
      h2.push_back("ya khouya chbik");
      b = i >= 3;
    } else if (i < 70) {
      h2.push_back("ya khoya chbik");  // spelling variant
      b = i >= 43;
    } else {
      h2.push_back("ya bouya");
      a = false;
      b = i < 76;
    }
    judgments.push_back({id, "x", a, ""});
    judgments.push_back({id, "y", b, ""});
  }
  const double automatic = SentenceErrorRate(r2, h2);
  const double human = HumanSentenceErrorRate(judgments, items);
  c.Expect(human < automatic, "human SER not below automatic SER");
  return c.Done("1000 pairs: WER " + Num(wer, 2) + "% CER " + Num(cer, 2) + "% SER " +
                Num(ser, 2) + "% match the DP oracle; human SER " + Num(human, 1) +
                "% < automatic " + Num(automatic, 1) + "%, agreement " +
                Num(Agreement(judgments, items), 1) + "%");
}

Outcome CorpusPipeline() {
  Checks c;
  const std::vector<std::string> samples = {
      "Bonjour, les AMIS !",  "السَّلام "
                              "عليكم",
      "ok  <fr>ça va</fr>",   "ــشنوة الأخبار ?",
      "Hello... World!!",     "tab\there", ""};
  int idempotent = 0;
  for (const std::string &s : samples) {
    const auto once = NormalizeText(s);
    if (!once) continue;
    c.Expect(NormalizeText(*once) == once, "normalization not idempotent on '" + s + "'");
    ++idempotent;
  }
  std::mt19937_64 rng(109);
  const std::vector<std::string> chunks = {"ahla", " bik ", "ça va", "hello", "  ", "3asslema"};
  int round_trips = 0;
  for (int i = 0; i < 500; ++i) {
    std::vector<TaggedSpan> spans;
    Language prev = Language::kEnglish;
    for (int k = 1 + static_cast<int>(rng() % 5); k > 0; --k) {
      Language lang = static_cast<Language>(rng() % 3);
      if (lang == Language::kTunisian && prev == Language::kTunisian) lang = Language::kFrench;
      spans.push_back({lang, chunks[rng() % chunks.size()]});
      prev = lang;
    }
    const std::string text = RenderTags(spans);
    c.Expect(RenderTags(ParseTags(text)) == text, "tag round trip failed on '" + text + "'");
    ++round_trips;
  }
  const LanguageStats stats = ComputeLanguageStats(
      std::vector<std::string>{"<fr>bonjour</fr> <en>hello</en> ahla bik"});
  c.Expect(stats.total_words == 4, "word count");
  c.Expect(stats.percent(Language::kFrench) == 25.0, "fr share");
  c.Expect(stats.percent(Language::kEnglish) == 25.0, "en share");
  c.Expect(stats.percent(Language::kTunisian) == 50.0, "tn share");
  return c.Done(std::to_string(idempotent) + " idempotent normalizations, " +
                std::to_string(round_trips) + " tag round trips, stats fr " +
                Num(stats.percent(Language::kFrench), 0) + "% en " +
                Num(stats.percent(Language::kEnglish), 0) + "% tn " +
                Num(stats.percent(Language::kTunisian), 0) +
                "%; released-corpus counts not checked (corpora not supplied)");
}

Outcome Formats() {
  Checks c;
  std::mt19937_64 rng(110);
  int pgrms = 0;
  for (std::size_t t : {0, 1, 7, 40}) {
    Posteriorgram p;
    p.vocab = Vocabulary::FromListing({"<blank>", " ", "a", "é", "ب"});
    p.frame_rate_hz = 50.0;
    p.frames = oracle::RandomLogprobs(t, p.vocab.size(), rng);
    // Values exactly representable in the f32 payload.
    for (std::size_t r = 0; r < t; ++r)
      for (double &x : p.frames.row(r)) x = static_cast<float>(x);
    const std::string bytes = WritePosteriorgram(p);
    const Posteriorgram back = ReadPosteriorgram(bytes);
    c.Expect(WritePosteriorgram(back) == bytes, "posteriorgram bytes changed");
    c.Expect(back.vocab == p.vocab && back.num_frames() == t, "posteriorgram shape changed");
    bool same = true;
    for (std::size_t r = 0; r < t; ++r)
      for (std::size_t k = 0; k < p.vocab.size(); ++k) same = same && back.frames(r, k) == p.frames(r, k);
    c.Expect(same, "posteriorgram values changed");
    ++pgrms;
  }

  const NGramModel m = TrainKneserNey(oracle::RandomSentences(400, 25, 9, 110), {4});
  const std::string arpa = WriteArpa(m);
  const NGramModel back = ReadArpa(arpa);
  c.Expect(WriteArpa(back) == arpa, "ARPA text changed");
  double worst = 0.0;
  for (const auto &line : oracle::RandomSentences(200, 27, 8, 111)) {
    const auto words = SplitWhitespace(line);
    for (std::size_t i = 0; i < words.size(); ++i) {
      const std::vector<std::string> ctx(words.begin(), words.begin() + i);
      worst = std::max(worst, std::abs(m.ScoreWord(words[i], ctx) - back.ScoreWord(words[i], ctx)));
    }
  }
  c.Expect(worst <= 1e-4, "ARPA scores moved");

  const fs::path dir = fs::temp_directory_path() / ("cstk-acceptance-camp-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  std::vector<EvalItem> items;
  for (int i = 0; i < 625; ++i) items.push_back({"item" + std::to_string(i), "", "text"});
  std::vector<std::string> evaluators;
  for (int i = 0; i < 25; ++i) evaluators.push_back("ev" + std::to_string(i));
  const EvalCampaign campaign = CreateCampaign(items, evaluators, 7);
  std::string before;
  std::size_t recorded = 0;
  {
    auto svc = EvalService::Create(dir, campaign);
    for (std::size_t i = 0; i < campaign.items.size(); ++i)
      for (const std::string &ev : campaign.assignment[i])
        if (rng() % 4 != 0) {
          svc->Submit({campaign.items[i].id, ev, rng() % 3 != 0, ""});
          ++recorded;
        }
    before = svc->Report().ToJson();
  }
  const fs::path journal = dir / "journal.jsonl";
  WriteFile(journal, ReadFile(journal) + "{\"accept\":tr");  // crash mid-append
  const std::string after = EvalService::Open(dir)->Report().ToJson();
  c.Expect(after == before, "replayed report differs");
  fs::remove_all(dir);
  return c.Done(std::to_string(pgrms) + " posteriorgram round trips bit-exact, ARPA max |diff| " +
                Sci(worst) + ", journal of " + std::to_string(recorded) +
                " judgments replayed to a byte-identical report");
}

}  // namespace

int main() {
  spdlog::set_level(spdlog::level::err);
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    double limit_s;
  };
  constexpr double kNoLimit = std::numeric_limits<double>::infinity();
  const std::vector<Criterion> criteria = {
      {"ctc-oracle-equivalence", CtcOracle, 10},
      {"ctc-gradient-check", CtcGradient, 30},
      {"decoder-exactness", DecoderExactness, kNoLimit},
      {"lm-fusion-flips-decision", LmFusion, kNoLimit},
      {"kneser-ney-correctness", KneserNey, 60},
      {"mixer-synthetic-code-switching", MixerExperiment, 300},
      {"self-training-round", SelfTraining, kNoLimit},
      {"metrics-oracle", Metrics, kNoLimit},
      {"corpus-pipeline", CorpusPipeline, kNoLimit},
      {"formats-and-replay", Formats, kNoLimit},
  };
  int failed = 0;
  for (const auto &[name, run, limit_s] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception &e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > limit_s) {
      outcome.pass = false;
      outcome.detail += "; over the " + Num(limit_s, 0) + " s budget";
    }
    if (!outcome.pass) ++failed;
    std::printf("%s %s: %s [%.2f s]\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  fs::remove_all(Synthetic().root);
  return failed == 0 ? 0 : 1;
}
