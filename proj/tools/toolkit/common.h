// tools/toolkit/common.h

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

#ifndef CSTK_TOOLS_TOOLKIT_COMMON_H_
#define CSTK_TOOLS_TOOLKIT_COMMON_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cstk/corpus/manifest.h"
#include "cstk/corpus/posteriorgram.h"
#include "cstk/corpus/vocabulary.h"
#include "cstk/ctc/decoder.h"
#include "cstk/mixer/mixer-train.h"
#include "cstk/selftrain/transcriber.h"

namespace cstk::toolkit {

enum class OutputFormat { kPlain, kRecords };

struct GlobalOptions {
  std::string log_level = "info";
  std::uint64_t seed = 0;
  int threads = 1;
  OutputFormat format = OutputFormat::kPlain;
};

/// Leaf subcommands and the actions they run once parsing is complete.
class CommandTable {
 public:
  void Add(CLI::App *command, std::function<void()> action) {
    actions_.emplace_back(command, std::move(action));
  }
  /// Runs the action of the parsed leaf; false when none was parsed.
  bool RunParsed() const;

 private:
  std::vector<std::pair<CLI::App *, std::function<void()>>> actions_;
};

void AddCorpusCommands(CLI::App *app, const GlobalOptions *global, CommandTable *table);
void AddModelCommands(CLI::App *app, const GlobalOptions *global, CommandTable *table);
void AddEvalCommands(CLI::App *app, const GlobalOptions *global, CommandTable *table);

// "-" names standard input or output.
std::string ReadInput(const std::string &path);
std::vector<std::string> ReadInputLines(const std::string &path);
void WriteOutput(const std::string &path, std::string_view contents);

/// Plain text or one JSON line, as selected by --format.
void Emit(const GlobalOptions &global, const std::string &plain, const nlohmann::json &record);

std::string Fixed2(double value);

/// A single ".pgrm" file, or every ".pgrm" file of a directory in name order,
/// keyed by file stem.
std::vector<std::pair<std::string, std::filesystem::path>> ListPosteriorgrams(
    const std::filesystem::path &path);

/// Vocabulary of the first posteriorgram found at `path`.
Vocabulary SourceVocabulary(const std::filesystem::path &path);

/// One symbol per line, blank written as "<blank>".
Vocabulary LoadVocabulary(const std::filesystem::path &path);

/// Decoder flags shared by decode, mixer decode and selftrain.
struct DecoderFlags {
  std::string lm;
  double alpha = DecoderConfig{}.lm_weight;
  double beta = DecoderConfig{}.word_bonus;
  std::size_t beam = DecoderConfig{}.beam_width;
  double token_min_logp = DecoderConfig{}.token_min_logp;
  bool end_of_sentence = false;

  void Register(CLI::App *command);
  DecoderConfig Config() const;
};

/// Source posteriorgram directories of a mixer in their fixed order.
struct SourceFlags {
  std::string tn, fr, en;

  void Register(CLI::App *command);
  std::vector<std::filesystem::path> Paths() const;
};

/// Mixer training hyperparameters; the seed and thread count come from the
/// global options.
struct MixerTrainFlags {
  MixerTrainConfig config;

  void Register(CLI::App *command);
  MixerTrainConfig Config(const GlobalOptions &global) const;
};

/// Feature lookup over the source directories plus the union vocabulary.
struct MixerInputs {
  FeatureLookup features;
  Vocabulary union_vocab;
};
MixerInputs OpenMixerInputs(const std::vector<std::filesystem::path> &sources);

}  // namespace cstk::toolkit

#endif  // CSTK_TOOLS_TOOLKIT_COMMON_H_
