// include/cstk/corpus/manifest.h

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

#ifndef CSTK_CORPUS_MANIFEST_H_
#define CSTK_CORPUS_MANIFEST_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cstk {

enum class Split { kTrain, kDev, kTest, kUnlabeled };

std::string_view SplitName(Split split);
Split ParseSplit(std::string_view name);

struct Utterance {
  std::string id;
  std::optional<std::string> audio_path;
  double duration_s = 0.0;
  std::string text;  // tagged transcript; empty for unlabeled entries
  Split split = Split::kTrain;
  bool pseudo = false;  // transcript produced by a model, not a human

  friend bool operator==(const Utterance &, const Utterance &) = default;
};

using Manifest = std::vector<Utterance>;

// Manifests are JSON lines, one record per utterance:
//   {"id":..,"audio_path":..|null,"duration_s":..,"text":..,"split":..,"pseudo":..}
// "pseudo" is optional on input and written only when true.
std::string SerializeUtterance(const Utterance &utt);
Utterance ParseUtterance(std::string_view line, std::size_t line_number = 0);

// Checks the manifest invariants: nonempty unique ids (DuplicateId), nonnegative
// durations and empty text on unlabeled entries (ManifestSyntax).
void ValidateManifest(const Manifest &manifest);

std::string SerializeManifest(const Manifest &manifest);
Manifest ParseManifest(std::string_view text);
Manifest LoadManifest(const std::filesystem::path &path);
void SaveManifest(const std::filesystem::path &path, const Manifest &manifest);

// "id<TAB>text" files used for hypotheses and references.
using TextTable = std::vector<std::pair<std::string, std::string>>;
TextTable ParseTextTable(std::string_view text);
std::string SerializeTextTable(const TextTable &rows);
TextTable LoadTextTable(const std::filesystem::path &path);

}  // namespace cstk

#endif  // CSTK_CORPUS_MANIFEST_H_
