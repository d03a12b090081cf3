// tools/toolkit/common.cc

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

#include "common.h"

#include <algorithm>
#include <iostream>
#include <iterator>

#include "fmt/format.h"

#include "cstk/base/error.h"
#include "cstk/base/file-util.h"
#include "cstk/mixer/union-vocab.h"

namespace cstk::toolkit {

namespace fs = std::filesystem;

bool CommandTable::RunParsed() const {
  for (const auto &[command, action] : actions_) {
    if (command->parsed()) {
      action();
      return true;
    }
  }
  return false;
}

std::string ReadInput(const std::string &path) {
  if (path != "-") return ReadFile(path);
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

std::vector<std::string> ReadInputLines(const std::string &path) {
  return SplitLines(ReadInput(path));
}

void WriteOutput(const std::string &path, std::string_view contents) {
  if (path == "-") {
    std::cout << contents << std::flush;
    return;
  }
  WriteFile(path, contents);
}

void Emit(const GlobalOptions &global, const std::string &plain, const nlohmann::json &record) {
  if (global.format == OutputFormat::kRecords) {
    std::cout << record.dump() << "\n";
  } else {
    std::cout << plain;
  }
  std::cout << std::flush;
}

std::string Fixed2(double value) { return fmt::format("{:.2f}", value); }

std::vector<std::pair<std::string, fs::path>> ListPosteriorgrams(const fs::path &path) {
  std::vector<std::pair<std::string, fs::path>> out;
  if (fs::is_directory(path)) {
    for (const fs::directory_entry &e : fs::directory_iterator(path))
      if (e.is_regular_file() && e.path().extension() == ".pgrm")
        out.emplace_back(e.path().stem().string(), e.path());
    std::sort(out.begin(), out.end());
  } else if (fs::exists(path)) {
    out.emplace_back(path.stem().string(), path);
  } else {
    throw Error(ErrorKind::kIoError, "no such file or directory: " + path.string());
  }
  return out;
}

Vocabulary SourceVocabulary(const fs::path &path) {
  const auto files = ListPosteriorgrams(path);
  if (files.empty()) throw Error(ErrorKind::kIoError, "no .pgrm files in " + path.string());
  return LoadPosteriorgram(files.front().second).vocab;
}

Vocabulary LoadVocabulary(const fs::path &path) {
  return Vocabulary::FromListing(ReadLines(path));
}

void DecoderFlags::Register(CLI::App *command) {
  command->add_option("--lm", lm, "ARPA language model for shallow fusion");
  command->add_option("--alpha", alpha, "LM weight")->capture_default_str();
  command->add_option("--beta", beta, "Word insertion bonus")->capture_default_str();
  command->add_option("--beam", beam, "Beam width")->capture_default_str()->check(
      CLI::PositiveNumber);
  command->add_option("--token-min-logp", token_min_logp, "Per-frame token pruning threshold")
      ->capture_default_str();
  command->add_flag("--eos", end_of_sentence, "Score the end-of-sentence token");
}

DecoderConfig DecoderFlags::Config() const {
  DecoderConfig c;
  c.lm_weight = alpha;
  c.word_bonus = beta;
  c.beam_width = beam;
  c.token_min_logp = token_min_logp;
  c.score_end_of_sentence = end_of_sentence;
  ValidateDecoderConfig(c);
  return c;
}

void SourceFlags::Register(CLI::App *command) {
  command->add_option("--tn", tn, "Tunisian source posteriorgram directory");
  command->add_option("--fr", fr, "French source posteriorgram directory");
  command->add_option("--en", en, "English source posteriorgram directory");
}

std::vector<fs::path> SourceFlags::Paths() const {
  std::vector<fs::path> out;
  for (const std::string *p : {&tn, &fr, &en})
    if (!p->empty()) out.emplace_back(*p);
  if (out.empty()) throw CLI::ValidationError("at least one of --tn, --fr, --en is required");
  return out;
}

void MixerTrainFlags::Register(CLI::App *command) {
  command->add_option("--hidden", config.hidden, "LSTM units per direction")->capture_default_str();
  command->add_option("--lr", config.learning_rate, "Adam learning rate")->capture_default_str();
  command->add_option("--batch", config.batch_size, "Utterances per update")->capture_default_str();
  command->add_option("--epochs", config.max_epochs, "Maximum epochs")->capture_default_str();
  command->add_option("--patience", config.patience, "Epochs without dev improvement")
      ->capture_default_str();
  command->add_option("--clip", config.clip_norm, "Gradient norm clip")->capture_default_str();
}

MixerTrainConfig MixerTrainFlags::Config(const GlobalOptions &global) const {
  MixerTrainConfig c = config;
  c.seed = global.seed;
  c.threads = global.threads;
  ValidateMixerTrainConfig(c);
  return c;
}

MixerInputs OpenMixerInputs(const std::vector<fs::path> &sources) {
  std::vector<Vocabulary> vocabs;
  std::vector<PosteriorgramLookup> lookups;
  for (const fs::path &dir : sources) {
    vocabs.push_back(SourceVocabulary(dir));
    lookups.push_back(DirectoryLookup(dir, vocabs.back()));
  }
  return {SourceFeatures(std::move(lookups)), BuildUnion(vocabs).union_vocab};
}

}  // namespace cstk::toolkit
