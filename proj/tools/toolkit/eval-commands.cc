// tools/toolkit/eval-commands.cc

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

#include <limits>
#include <map>
#include <set>

#include "spdlog/spdlog.h"

#include "common.h"
#include "cstk/base/error.h"
#include "cstk/base/file-util.h"
#include "cstk/base/utf8.h"
#include "cstk/evalsvc/campaign.h"
#include "cstk/evalsvc/eval-service.h"
#include "cstk/evalsvc/http-api.h"
#include "cstk/lm/arpa.h"
#include "cstk/metrics/error-rates.h"
#include "cstk/mixer/mixer-model.h"
#include "cstk/selftrain/selftrain.h"

namespace cstk::toolkit {

namespace fs = std::filesystem;

namespace {

// Hypotheses aligned with the references by id; the id sets must agree.
std::vector<std::string> AlignById(const TextTable &refs, const TextTable &hyps) {
  std::map<std::string, std::string> by_id(hyps.begin(), hyps.end());
  std::vector<std::string> missing, extra, aligned;
  std::set<std::string> ref_ids;
  for (const auto &[id, text] : refs) {
    ref_ids.insert(id);
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      missing.push_back(id);
    } else {
      aligned.push_back(it->second);
    }
  }
  for (const auto &[id, text] : hyps)
    if (!ref_ids.count(id)) extra.push_back(id);
  if (!missing.empty() || !extra.empty()) {
    std::string msg;
    if (!missing.empty()) msg += "missing from hypotheses: " + JoinStrings(missing, ", ");
    if (!extra.empty())
      msg += std::string(msg.empty() ? "" : "; ") + "not in references: " + JoinStrings(extra, ", ");
    throw Error(ErrorKind::kIdMismatch, msg);
  }
  return aligned;
}

void AddScore(CLI::App *app, const GlobalOptions *global, CommandTable *table) {
  struct Opts {
    std::string refs, hyps, metric = "wer";
    bool raw = false, cer_spaces = false;
  };
  auto o = std::make_shared<Opts>();
  CLI::App *cmd = app->add_subcommand("score", "WER, CER or SER of hypotheses against references");
  cmd->add_option("--refs", o->refs, "References, id<TAB>text per line")->required();
  cmd->add_option("--hyps", o->hyps, "Hypotheses, id<TAB>text per line")->required();
  cmd->add_option("--metric", o->metric, "Metric")
      ->capture_default_str()
      ->check(CLI::IsMember({"wer", "cer", "ser"}));
  cmd->add_flag("--raw", o->raw, "Score the texts as given, without tag stripping or normalization");
  cmd->add_flag("--cer-spaces", o->cer_spaces, "Count spaces as characters in CER");
  table->Add(cmd, [o, global] {
    const TextTable refs = LoadTextTable(o->refs);
    const std::vector<std::string> hyps = AlignById(refs, LoadTextTable(o->hyps));
    std::vector<std::string> ref_texts;
    for (const auto &[id, text] : refs) ref_texts.push_back(text);
    ScoringOptions options;
    options.normalize = !o->raw;
    options.cer_ignore_spaces = !o->cer_spaces;
    std::string name = o->metric;
    for (char &c : name) c = static_cast<char>(c - 'a' + 'A');
    nlohmann::json record = {{"metric", o->metric}, {"utterances", refs.size()}};
    double percent = 0.0;
    if (o->metric == "ser") {
      percent = SentenceErrorRate(ref_texts, hyps, options);
    } else {
      const ErrorRate r = o->metric == "wer" ? WordErrorRate(ref_texts, hyps, options)
                                             : CharErrorRate(ref_texts, hyps, options);
      percent = r.percent;
      record["substitutions"] = r.counts.substitutions;
      record["insertions"] = r.counts.insertions;
      record["deletions"] = r.counts.deletions;
      record["reference_length"] = r.counts.ref_length();
    }
    record["percent"] = percent;
    Emit(*global, name + " " + Fixed2(percent) + "\n", record);
  });
}

void AddSelfTrain(CLI::App *app, const GlobalOptions *global, CommandTable *table) {
  struct Opts {
    std::string labeled, unlabeled, dev, target, mode = "scratch";
    double threshold = -std::numeric_limits<double>::infinity();
    std::string oracle, pgrm, vocab, mixer_model;
    DecoderFlags decoder;
    SourceFlags sources;
    MixerTrainFlags training;
    int order = 4;
    std::string report = "-", out_manifest, out_model;
  };
  auto o = std::make_shared<Opts>();
  CLI::App *cmd = app->add_subcommand("selftrain", "One pseudo-label, merge and retrain round");
  cmd->add_option("--labeled", o->labeled, "Labeled manifest")->required();
  cmd->add_option("--unlabeled", o->unlabeled, "Unlabeled manifest")->required();
  cmd->add_option("--dev", o->dev, "Development manifest for the before/after metric")->required();
  cmd->add_option("--target", o->target, "Model to retrain")
      ->required()
      ->check(CLI::IsMember({"lm", "mixer"}));
  cmd->add_option("--mode", o->mode, "Retraining mode")
      ->capture_default_str()
      ->check(CLI::IsMember({"scratch", "finetune"}));
  cmd->add_option("--threshold", o->threshold, "Keep pseudo-labels with confidence above this")
      ->default_str("-inf");
  auto *oracle = cmd->add_option("--oracle", o->oracle,
                                 "Transcribe from a reference table, id<TAB>text per line");
  auto *pgrm = cmd->add_option("--pgrm", o->pgrm, "Transcribe by decoding <dir>/<id>.pgrm");
  cmd->add_option("--vocab", o->vocab, "Vocabulary for --pgrm (default: the first file's)");
  auto *model = cmd->add_option("--mixer-model", o->mixer_model,
                                "Transcribe through this mixer; also the fine-tuning start point");
  oracle->excludes(pgrm);
  o->decoder.Register(cmd);
  o->sources.Register(cmd);
  o->training.Register(cmd);
  cmd->add_option("--order", o->order, "N-gram order of the lm target")->capture_default_str();
  cmd->add_option("--report", o->report, "Report records")->capture_default_str();
  cmd->add_option("--out-manifest", o->out_manifest, "Merged manifest");
  cmd->add_option("--out-model", o->out_model, "Retrained model (ARPA or mixer file)");
  table->Add(cmd, [o, global, oracle, pgrm, model] {
    const std::size_t chosen = oracle->count() + pgrm->count() + model->count();
    if (chosen == 0)
      throw CLI::ValidationError("one of --oracle, --pgrm, --mixer-model is required");

    const Manifest labeled = LoadManifest(o->labeled);
    const Manifest unlabeled = LoadManifest(o->unlabeled);
    const Manifest dev = LoadManifest(o->dev);
    const DecoderConfig decoder = o->decoder.Config();
    std::optional<NGramModel> lm;
    if (!o->decoder.lm.empty()) lm = LoadArpa(o->decoder.lm);
    const NGramModel *lm_ptr = lm ? &*lm : nullptr;

    std::optional<MixerInputs> mixer_inputs;
    if (o->target == "mixer" || model->count()) mixer_inputs = OpenMixerInputs(o->sources.Paths());
    std::optional<MixerParams> initial;
    if (model->count()) initial = LoadMixer(o->mixer_model);

    std::unique_ptr<Transcriber> transcriber;
    if (oracle->count()) {
      const TextTable rows = LoadTextTable(o->oracle);
      transcriber = std::make_unique<OracleTranscriber>(
          std::map<std::string, std::string>(rows.begin(), rows.end()));
    } else if (pgrm->count()) {
      std::optional<Vocabulary> vocab;
      if (!o->vocab.empty()) vocab = LoadVocabulary(o->vocab);
      transcriber = std::make_unique<PosteriorgramTranscriber>(DirectoryLookup(o->pgrm, vocab),
                                                               decoder, lm_ptr);
    } else {
      transcriber = std::make_unique<MixerTranscriber>(
          mixer_inputs->features, *initial, mixer_inputs->union_vocab, decoder, lm_ptr);
    }

    std::unique_ptr<RetrainTarget> target;
    LmTarget *lm_target = nullptr;
    MixerTarget *mixer_target = nullptr;
    if (o->target == "lm") {
      KNConfig kn;
      kn.order = o->order;
      std::vector<std::string> dev_texts;
      for (const Utterance &u : dev) dev_texts.push_back(TrainingText(u.text));
      auto t = std::make_unique<LmTarget>(kn, std::move(dev_texts));
      lm_target = t.get();
      target = std::move(t);
    } else {
      auto t = std::make_unique<MixerTarget>(mixer_inputs->features, mixer_inputs->union_vocab,
                                             o->training.Config(*global), dev, initial);
      mixer_target = t.get();
      target = std::move(t);
    }

    SelfTrainConfig config;
    config.confidence_threshold = o->threshold;
    config.mode = o->mode == "scratch" ? RetrainMode::kFromScratch : RetrainMode::kFineTune;
    config.threads = global->threads;
    Manifest merged;
    const SelfTrainReport report =
        SelfTrainRound(labeled, unlabeled, *transcriber, *target, config, &merged);
    WriteOutput(o->report, report.Records());
    if (!o->out_manifest.empty()) SaveManifest(o->out_manifest, merged);
    if (!o->out_model.empty()) {
      if (lm_target) SaveArpa(o->out_model, lm_target->model());
      if (mixer_target) SaveMixer(o->out_model, mixer_target->params());
    }
    spdlog::info("{} {} -> {}", report.metric, report.before, report.after);
  });
}

void AddEvalSvc(CLI::App *app, const GlobalOptions *global, CommandTable *table) {
  CLI::App *svc = app->add_subcommand("evalsvc", "Human evaluation campaigns");
  svc->require_subcommand(1);

  struct CreateOpts {
    std::string items, hyps, evaluators, out;
    std::uint64_t seed = 0;
  };
  auto c = std::make_shared<CreateOpts>();
  CLI::App *create = svc->add_subcommand("create", "Assign every item to two evaluators");
  create->add_option("--items", c->items, "Manifest of the evaluated utterances")->required();
  create->add_option("--hyps", c->hyps, "Transcripts to judge, id<TAB>text per line")->required();
  create->add_option("--evaluators", c->evaluators, "Evaluator ids, one per line")->required();
  auto *seed = create->add_option("--seed", c->seed, "Assignment seed (default: global --seed)");
  create->add_option("--out", c->out, "Campaign directory")->required();
  table->Add(create, [c, global, seed] {
    const Manifest manifest = LoadManifest(c->items);
    TextTable refs;
    for (const Utterance &u : manifest) refs.emplace_back(u.id, "");
    const std::vector<std::string> texts = AlignById(refs, LoadTextTable(c->hyps));
    std::vector<EvalItem> items;
    for (std::size_t i = 0; i < manifest.size(); ++i) {
      std::string audio;
      if (manifest[i].audio_path) audio = fs::absolute(*manifest[i].audio_path).string();
      items.push_back({manifest[i].id, audio, texts[i]});
    }
    std::vector<std::string> evaluators;
    for (const std::string &line : ReadLines(c->evaluators)) {
      std::vector<std::string> words = SplitWhitespace(line);
      if (!words.empty()) evaluators.push_back(words.front());
    }
    const std::uint64_t s = seed->count() ? c->seed : global->seed;
    EvalService::Create(c->out, CreateCampaign(std::move(items), std::move(evaluators), s));
  });

  struct ServeOpts {
    std::string campaign, host = "127.0.0.1";
    int port = 8080;
  };
  auto s = std::make_shared<ServeOpts>();
  CLI::App *serve = svc->add_subcommand("serve", "Serve the evaluation HTTP API");
  serve->add_option("--campaign", s->campaign, "Campaign directory")->required();
  serve->add_option("--port", s->port, "TCP port")->capture_default_str();
  serve->add_option("--host", s->host, "Listen address")->capture_default_str();
  table->Add(serve, [s] {
    auto service = EvalService::Open(s->campaign);
    ServeCampaign(service.get(), s->host, s->port);
  });

  auto r = std::make_shared<std::string>();
  CLI::App *report = svc->add_subcommand("report", "Human SER, agreement and progress");
  report->add_option("--campaign", *r, "Campaign directory")->required();
  table->Add(report, [r, global] {
    const CampaignReport rep = EvalService::Open(*r)->Report();
    if (global->format == OutputFormat::kRecords) {
      std::cout << rep.ToJson() << "\n" << std::flush;
      return;
    }
    auto metric = [](const std::optional<double> &v) { return v ? Fixed2(*v) : std::string("n/a"); };
    std::string plain = "total_items " + std::to_string(rep.total_items) + "\ncompleted_items " +
                        std::to_string(rep.completed_items) + "\npending_items " +
                        std::to_string(rep.pending_items.size()) + "\nhuman_ser " +
                        metric(rep.human_ser) + "\nagreement " + metric(rep.agreement) + "\n";
    for (const auto &[id, p] : rep.evaluators)
      plain += "evaluator " + id + " " + std::to_string(p.judged) + "/" +
               std::to_string(p.assigned) + "\n";
    std::cout << plain << std::flush;
  });
}

}  // namespace

void AddEvalCommands(CLI::App *app, const GlobalOptions *global, CommandTable *table) {
  AddScore(app, global, table);
  AddSelfTrain(app, global, table);
  AddEvalSvc(app, global, table);
}

}  // namespace cstk::toolkit
