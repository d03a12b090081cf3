// src/lm/arpa.cc

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

#include "cstk/lm/arpa.h"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "cstk/base/error.h"
#include "cstk/base/file-util.h"
#include "cstk/base/utf8.h"

namespace cstk {

namespace {

std::string FormatValue(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  // Avoid "-0.000000" so that the text form is canonical.
  if (std::string_view(buf) == "-0.000000") return "0.000000";
  return buf;
}

[[noreturn]] void Syntax(std::size_t line, const std::string &reason) {
  throw Error(ErrorKind::kArpaSyntax, "line " + std::to_string(line) + ": " + reason);
}

double ParseValue(std::string_view s, std::size_t line) {
  double v = 0.0;
  const char *end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) Syntax(line, "bad number '" + std::string(s) + "'");
  return v;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string WriteArpa(const NGramModel &model) {
  const WordTable &words = model.words();
  std::string out = "\\data\\\n";
  for (int k = 1; k <= model.order(); ++k) {
    out += "ngram " + std::to_string(k) + "=" +
           std::to_string(model.tables()[static_cast<std::size_t>(k - 1)].size()) + "\n";
  }
  for (int k = 1; k <= model.order(); ++k) {
    out += "\n\\" + std::to_string(k) + "-grams:\n";
    std::vector<std::pair<std::vector<std::string>, const NGramEntry *>> rows;
    for (const auto &[ids, entry] : model.tables()[static_cast<std::size_t>(k - 1)]) {
      std::vector<std::string> tokens;
      for (WordId id : ids) tokens.push_back(words.Word(id));
      rows.emplace_back(std::move(tokens), &entry);
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    for (const auto &[tokens, entry] : rows) {
      out += FormatValue(entry->log10_prob) + "\t" + JoinStrings(tokens, " ");
      if (k < model.order()) out += "\t" + FormatValue(entry->log10_backoff);
      out += "\n";
    }
  }
  out += "\n\\end\\\n";
  return out;
}

NGramModel ReadArpa(std::string_view text) {
  const std::vector<std::string> lines = SplitLines(text);
  std::size_t i = 0;
  auto skip_blank = [&] {
    while (i < lines.size() && Trim(lines[i]).empty()) ++i;
  };

  skip_blank();
  if (i >= lines.size() || Trim(lines[i]) != "\\data\\") Syntax(i + 1, "expected \\data\\");
  ++i;
  std::vector<std::size_t> declared;
  for (; i < lines.size(); ++i) {
    std::string_view line = Trim(lines[i]);
    if (line.empty()) continue;
    if (line.substr(0, 6) != "ngram ") break;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) Syntax(i + 1, "expected 'ngram k=count'");
    const auto k = static_cast<std::size_t>(ParseValue(Trim(line.substr(6, eq - 6)), i + 1));
    const auto c = static_cast<std::size_t>(ParseValue(Trim(line.substr(eq + 1)), i + 1));
    if (k != declared.size() + 1) Syntax(i + 1, "ngram orders must be listed 1, 2, ...");
    declared.push_back(c);
  }
  if (declared.empty()) Syntax(i + 1, "no ngram counts declared");
  const int order = static_cast<int>(declared.size());

  WordTable words;
  std::vector<NGramModel::Table> tables(declared.size());
  for (int k = 1; k <= order; ++k) {
    skip_blank();
    const std::string header = "\\" + std::to_string(k) + "-grams:";
    if (i >= lines.size() || Trim(lines[i]) != header) Syntax(i + 1, "expected " + header);
    ++i;
    auto &table = tables[static_cast<std::size_t>(k - 1)];
    for (; i < lines.size(); ++i) {
      std::string_view line = Trim(lines[i]);
      if (line.empty()) continue;
      if (line.front() == '\\') break;
      std::vector<std::string> fields = SplitWhitespace(line);
      const std::size_t want = static_cast<std::size_t>(k) + 1;
      if (fields.size() != want && fields.size() != want + 1)
        Syntax(i + 1, "expected " + std::to_string(want) + " or " + std::to_string(want + 1) +
                          " fields");
      NGramEntry e;
      e.log10_prob = ParseValue(fields[0], i + 1);
      if (fields.size() == want + 1) {
        if (k == order) Syntax(i + 1, "highest-order entries carry no backoff weight");
        e.log10_backoff = ParseValue(fields[want], i + 1);
      }
      if (e.log10_prob > 0.0) Syntax(i + 1, "probability above 1");
      std::vector<WordId> ids;
      for (std::size_t f = 1; f < want; ++f) {
        if (k == 1) {
          ids.push_back(words.Intern(fields[f]));
        } else {
          if (!words.Contains(fields[f])) Syntax(i + 1, "word '" + fields[f] + "' has no unigram");
          ids.push_back(words.Find(fields[f]));
        }
      }
      if (!table.emplace(std::move(ids), e).second) Syntax(i + 1, "duplicate n-gram");
    }
    if (table.size() != declared[static_cast<std::size_t>(k - 1)]) {
      throw Error(ErrorKind::kCountMismatch,
                  std::to_string(k) + "-grams: declared " +
                      std::to_string(declared[static_cast<std::size_t>(k - 1)]) + ", found " +
                      std::to_string(table.size()));
    }
  }
  skip_blank();
  if (i >= lines.size() || Trim(lines[i]) != "\\end\\") Syntax(i + 1, "expected \\end\\");
  // Files from toolkits that omit <unk> get one with negligible mass so that
  // scoring stays total.
  if (tables[0].find({WordTable::kUnk}) == tables[0].end())
    tables[0][{WordTable::kUnk}] = NGramEntry{kMissingUnkLog10Prob, 0.0};
  return NGramModel(order, std::move(words), std::move(tables));
}

NGramModel LoadArpa(const std::filesystem::path &path) { return ReadArpa(ReadFile(path)); }

void SaveArpa(const std::filesystem::path &path, const NGramModel &model) {
  WriteFile(path, WriteArpa(model));
}

}  // namespace cstk
