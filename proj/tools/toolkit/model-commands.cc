// tools/toolkit/model-commands.cc

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

#include "spdlog/spdlog.h"

#include "common.h"
#include "cstk/base/error.h"
#include "cstk/lm/arpa.h"
#include "cstk/lm/kneser-ney.h"
#include "cstk/mixer/mixer-model.h"
#include "cstk/selftrain/selftrain.h"

namespace cstk::toolkit {

namespace fs = std::filesystem;

namespace {

void AddLm(CLI::App *app, const GlobalOptions *global, CommandTable *table) {
  CLI::App *lm = app->add_subcommand("lm", "Kneser-Ney n-gram language models");
  lm->require_subcommand(1);

  struct TrainOpts {
    std::string in = "-", out;
    KNConfig config;
    double discount = 0.0;
  };
  auto t = std::make_shared<TrainOpts>();
  CLI::App *train = lm->add_subcommand("train", "Estimate an interpolated Kneser-Ney model");
  train->add_option("--order", t->config.order, "N-gram order")->capture_default_str()->check(
      CLI::PositiveNumber);
  train->add_option("--in", t->in, "Normalized corpus, one sentence per line")
      ->capture_default_str();
  train->add_option("--out", t->out, "Output ARPA file")->required();
  train->add_option("--min-count", t->config.min_count, "Prune rarer highest-order n-grams")
      ->capture_default_str();
  train->add_option("--discount", t->discount, "Fixed discount for every order (default: estimated)");
  table->Add(train, [t, train] {
    KNConfig config = t->config;
    if (train->count("--discount")) config.fixed_discount = t->discount;
    const NGramModel model = TrainKneserNey(ReadInputLines(t->in), config);
    for (const std::string &w : model.warnings()) spdlog::warn("{}", w);
    SaveArpa(t->out, model);
  });

  struct PplOpts {
    std::string model, in = "-";
  };
  auto p = std::make_shared<PplOpts>();
  CLI::App *ppl = lm->add_subcommand("ppl", "Perplexity of a model on a text");
  ppl->add_option("--model", p->model, "ARPA file")->required();
  ppl->add_option("--in", p->in, "Normalized text, one sentence per line")->capture_default_str();
  table->Add(ppl, [p, global] {
    const NGramModel model = LoadArpa(p->model);
    const std::vector<std::string> lines = ReadInputLines(p->in);
    const double value = Perplexity(model, lines);
    Emit(*global, "perplexity " + Fixed2(value) + "\n",
         {{"perplexity", value}, {"sentences", lines.size()}});
  });
}

std::string DecodeAll(const std::vector<std::pair<std::string, fs::path>> &files,
                      const Vocabulary &vocab, const DecoderConfig &config, const NGramModel *lm) {
  TextTable rows;
  for (const auto &[id, path] : files) {
    const Posteriorgram p = LoadPosteriorgram(path, &vocab);
    rows.emplace_back(id, DecodeWithConfidence(p.frames, vocab, config, lm).text);
  }
  return SerializeTextTable(rows);
}

void AddDecode(CLI::App *app, CommandTable *table) {
  struct Opts {
    std::string pgrm, vocab, out = "-";
    DecoderFlags decoder;
  };
  auto o = std::make_shared<Opts>();
  CLI::App *cmd = app->add_subcommand("decode", "CTC prefix beam search over posteriorgrams");
  cmd->add_option("--pgrm", o->pgrm, "Posteriorgram file or directory")->required();
  cmd->add_option("--vocab", o->vocab, "Vocabulary file (default: the first posteriorgram's)");
  o->decoder.Register(cmd);
  cmd->add_option("--out", o->out, "Hypotheses, id<TAB>text per line")->capture_default_str();
  table->Add(cmd, [o] {
    const DecoderConfig config = o->decoder.Config();
    const Vocabulary vocab = o->vocab.empty() ? SourceVocabulary(o->pgrm) : LoadVocabulary(o->vocab);
    std::optional<NGramModel> lm;
    if (!o->decoder.lm.empty()) lm = LoadArpa(o->decoder.lm);
    WriteOutput(o->out, DecodeAll(ListPosteriorgrams(o->pgrm), vocab, config, lm ? &*lm : nullptr));
  });
}

void AddMixer(CLI::App *app, const GlobalOptions *global, CommandTable *table) {
  CLI::App *mixer = app->add_subcommand("mixer", "BiLSTM mixer over source posteriorgrams");
  mixer->require_subcommand(1);

  struct TrainOpts {
    SourceFlags sources;
    std::string manifest, dev, out;
    MixerTrainFlags training;
  };
  auto t = std::make_shared<TrainOpts>();
  CLI::App *train = mixer->add_subcommand("train", "Train a mixer with CTC");
  t->sources.Register(train);
  train->add_option("--manifest", t->manifest, "Training manifest")->required();
  train->add_option("--dev", t->dev, "Development manifest for early stopping");
  train->add_option("--out", t->out, "Output mixer file")->required();
  t->training.Register(train);
  table->Add(train, [t, global] {
    const MixerInputs inputs = OpenMixerInputs(t->sources.Paths());
    const Manifest dev = t->dev.empty() ? Manifest{} : LoadManifest(t->dev);
    MixerTarget target(inputs.features, inputs.union_vocab, t->training.Config(*global), dev);
    target.Retrain(LoadManifest(t->manifest), RetrainMode::kFromScratch);
    const MixerTrainResult &r = target.last_training();
    for (const EpochRecord &e : r.history)
      spdlog::info("epoch {} train {:.4f} dev {:.4f}", e.epoch, e.train_loss, e.dev_loss);
    if (!dev.empty()) spdlog::info("dev CER {:.2f}", target.Evaluate());
    SaveMixer(t->out, target.params());
  });

  struct DecodeOpts {
    SourceFlags sources;
    std::string model, manifest, out = "-";
    DecoderFlags decoder;
  };
  auto d = std::make_shared<DecodeOpts>();
  CLI::App *decode = mixer->add_subcommand("decode", "Decode utterances through a trained mixer");
  decode->add_option("--model", d->model, "Mixer file")->required();
  d->sources.Register(decode);
  decode->add_option("--manifest", d->manifest, "Utterances to decode")->required();
  d->decoder.Register(decode);
  decode->add_option("--out", d->out, "Hypotheses, id<TAB>text per line")->capture_default_str();
  table->Add(decode, [d] {
    const DecoderConfig config = d->decoder.Config();
    const MixerInputs inputs = OpenMixerInputs(d->sources.Paths());
    std::optional<NGramModel> lm;
    if (!d->decoder.lm.empty()) lm = LoadArpa(d->decoder.lm);
    const MixerTranscriber transcriber(inputs.features, LoadMixer(d->model), inputs.union_vocab,
                                       config, lm ? &*lm : nullptr);
    TextTable rows;
    for (const Utterance &u : LoadManifest(d->manifest))
      rows.emplace_back(u.id, transcriber.Transcribe(u).text);
    WriteOutput(d->out, SerializeTextTable(rows));
  });
}

}  // namespace

void AddModelCommands(CLI::App *app, const GlobalOptions *global, CommandTable *table) {
  AddLm(app, global, table);
  AddDecode(app, table);
  AddMixer(app, global, table);
}

}  // namespace cstk::toolkit
