// src/corpus/manifest.cc

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

#include "cstk/corpus/manifest.h"

#include <cmath>
#include <unordered_set>

#include "cstk/base/error.h"
#include "cstk/base/file-util.h"
#include "json.hpp"

namespace cstk {

using nlohmann::json;

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    case Split::kTest: return "test";
    case Split::kUnlabeled: return "unlabeled";
  }
  return "train";
}

Split ParseSplit(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "dev") return Split::kDev;
  if (name == "test") return Split::kTest;
  if (name == "unlabeled") return Split::kUnlabeled;
  throw Error(ErrorKind::kManifestSyntax, "unknown split '" + std::string(name) + "'");
}

std::string SerializeUtterance(const Utterance &utt) {
  json j;
  j["id"] = utt.id;
  j["audio_path"] = utt.audio_path ? json(*utt.audio_path) : json(nullptr);
  j["duration_s"] = utt.duration_s;
  j["text"] = utt.text;
  j["split"] = std::string(SplitName(utt.split));
  if (utt.pseudo) j["pseudo"] = true;
  return j.dump();
}

Utterance ParseUtterance(std::string_view line, std::size_t line_number) {
  const std::string where = "line " + std::to_string(line_number) + ": ";
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error &e) {
    throw Error(ErrorKind::kManifestSyntax, where + e.what());
  }
  try {
    Utterance utt;
    utt.id = j.at("id").get<std::string>();
    if (j.contains("audio_path") && !j["audio_path"].is_null())
      utt.audio_path = j["audio_path"].get<std::string>();
    utt.duration_s = j.value("duration_s", 0.0);
    utt.text = j.value("text", std::string());
    utt.split = ParseSplit(j.at("split").get<std::string>());
    utt.pseudo = j.value("pseudo", false);
    return utt;
  } catch (const json::exception &e) {
    throw Error(ErrorKind::kManifestSyntax, where + e.what());
  } catch (const Error &e) {
    throw Error(ErrorKind::kManifestSyntax, where + e.what());
  }
}

void ValidateManifest(const Manifest &manifest) {
  std::unordered_set<std::string> ids;
  for (const Utterance &u : manifest) {
    if (u.id.empty()) throw Error(ErrorKind::kManifestSyntax, "empty utterance id");
    if (!ids.insert(u.id).second) throw Error(ErrorKind::kDuplicateId, u.id);
    if (!(u.duration_s >= 0.0) || !std::isfinite(u.duration_s))
      throw Error(ErrorKind::kManifestSyntax, u.id + ": bad duration");
    if (u.split == Split::kUnlabeled && !u.text.empty())
      throw Error(ErrorKind::kManifestSyntax, u.id + ": unlabeled entry has text");
  }
}

std::string SerializeManifest(const Manifest &manifest) {
  std::string out;
  for (const Utterance &u : manifest) {
    out += SerializeUtterance(u);
    out += '\n';
  }
  return out;
}

Manifest ParseManifest(std::string_view text) {
  Manifest manifest;
  std::size_t n = 0;
  for (const std::string &line : SplitLines(text)) {
    ++n;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    manifest.push_back(ParseUtterance(line, n));
  }
  ValidateManifest(manifest);
  return manifest;
}

Manifest LoadManifest(const std::filesystem::path &path) {
  return ParseManifest(ReadFile(path));
}

void SaveManifest(const std::filesystem::path &path, const Manifest &manifest) {
  ValidateManifest(manifest);
  WriteFile(path, SerializeManifest(manifest));
}

TextTable ParseTextTable(std::string_view text) {
  TextTable rows;
  std::unordered_set<std::string> ids;
  std::size_t n = 0;
  for (const std::string &line : SplitLines(text)) {
    ++n;
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    std::string id = line.substr(0, tab);
    std::string body = tab == std::string::npos ? std::string() : line.substr(tab + 1);
    if (id.empty())
      throw Error(ErrorKind::kManifestSyntax, "line " + std::to_string(n) + ": empty id");
    if (!ids.insert(id).second) throw Error(ErrorKind::kDuplicateId, id);
    rows.emplace_back(std::move(id), std::move(body));
  }
  return rows;
}

std::string SerializeTextTable(const TextTable &rows) {
  std::string out;
  for (const auto &[id, text] : rows) out += id + "\t" + text + "\n";
  return out;
}

TextTable LoadTextTable(const std::filesystem::path &path) {
  return ParseTextTable(ReadFile(path));
}

}  // namespace cstk
