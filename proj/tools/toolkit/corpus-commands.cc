// tools/toolkit/corpus-commands.cc

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

#include <filesystem>
#include <sstream>

#include "spdlog/spdlog.h"

#include "common.h"
#include "cstk/base/error.h"
#include "cstk/base/file-util.h"
#include "cstk/corpus/tags.h"
#include "cstk/corpus/text-normalize.h"
#include "cstk/segmenter/segmenter.h"
#include "cstk/segmenter/wav.h"

namespace cstk::toolkit {

namespace fs = std::filesystem;

namespace {

void AddNormalize(CLI::App *app, CommandTable *table) {
  struct Opts {
    std::string in = "-", out = "-";
    bool keep_numeric = false, keep_case = false;
  };
  auto o = std::make_shared<Opts>();
  CLI::App *cmd = app->add_subcommand("normalize", "Normalize text, one sentence per line");
  cmd->add_option("--in", o->in, "Input text file")->capture_default_str();
  cmd->add_option("--out", o->out, "Output text file")->capture_default_str();
  cmd->add_flag("--keep-numeric", o->keep_numeric, "Keep sentences that contain digits");
  cmd->add_flag("--keep-case", o->keep_case, "Do not lowercase Latin letters");
  table->Add(cmd, [o] {
    NormalizeOptions options;
    options.drop_numeric = !o->keep_numeric;
    options.lowercase_latin = !o->keep_case;
    std::string out;
    std::size_t dropped = 0;
    for (const std::string &line : ReadInputLines(o->in)) {
      const std::optional<std::string> clean = NormalizeText(line, options);
      if (!clean) {
        ++dropped;
        continue;
      }
      out += *clean + "\n";
    }
    spdlog::info("dropped {} sentences", dropped);
    WriteOutput(o->out, out);
  });
}

void AddTags(CLI::App *app, const GlobalOptions *global, CommandTable *table) {
  struct Opts {
    std::string in = "-";
    bool strip = false;
  };
  auto o = std::make_shared<Opts>();
  CLI::App *cmd = app->add_subcommand("tags", "Parse <fr>/<en> language tags, one transcript per line");
  cmd->add_option("--in", o->in, "Tagged text file")->capture_default_str();
  cmd->add_flag("--strip", o->strip, "Print the text with the tags removed");
  table->Add(cmd, [o, global] {
    std::size_t n = 0;
    for (const std::string &line : ReadInputLines(o->in)) {
      ++n;
      std::vector<TaggedSpan> spans;
      try {
        spans = ParseTags(line);
      } catch (const Error &e) {
        throw Error(e.kind(), "line " + std::to_string(n) + ": " + e.what());
      }
      if (o->strip) {
        std::string text;
        for (const TaggedSpan &s : spans) text += s.text;
        Emit(*global, text + "\n", {{"line", n}, {"text", text}});
        continue;
      }
      std::string plain;
      nlohmann::json list = nlohmann::json::array();
      for (const TaggedSpan &s : spans) {
        plain += std::to_string(n) + "\t" + std::string(LanguageCode(s.lang)) + "\t" + s.text + "\n";
        list.push_back({{"lang", LanguageCode(s.lang)}, {"text", s.text}});
      }
      Emit(*global, plain, {{"line", n}, {"spans", list}});
    }
  });
}

void AddStats(CLI::App *app, const GlobalOptions *global, CommandTable *table) {
  struct Opts {
    std::string in, manifest;
  };
  auto o = std::make_shared<Opts>();
  CLI::App *cmd = app->add_subcommand("stats", "Word counts and language shares of a corpus");
  auto *in = cmd->add_option("--in", o->in, "Text file, one (optionally tagged) sentence per line");
  auto *mf = cmd->add_option("--manifest", o->manifest, "Manifest whose transcripts are counted");
  in->excludes(mf);
  cmd->require_option(1);
  table->Add(cmd, [o, global] {
    std::vector<std::string> texts;
    if (!o->manifest.empty()) {
      for (const Utterance &u : LoadManifest(o->manifest))
        if (u.split != Split::kUnlabeled) texts.push_back(u.text);
    } else {
      texts = ReadInputLines(o->in);
    }
    std::vector<std::string> plain_texts;
    for (const std::string &t : texts) plain_texts.push_back(StripTags(t));
    const CorpusStats corpus = ComputeCorpusStats(plain_texts);
    const LanguageStats langs = ComputeLanguageStats(texts);
    std::string plain = "words " + std::to_string(corpus.word_count) + "\nunique_words " +
                        std::to_string(corpus.unique_word_count) + "\n";
    nlohmann::json record = {{"words", corpus.word_count},
                             {"unique_words", corpus.unique_word_count}};
    for (Language lang : {Language::kTunisian, Language::kFrench, Language::kEnglish}) {
      const std::string code(LanguageCode(lang));
      plain += code + " " + Fixed2(langs.percent(lang)) + "%\n";
      record["percent_" + code] = langs.percent(lang);
    }
    Emit(*global, plain, record);
  });
}

void AddVocab(CLI::App *app, CommandTable *table) {
  CLI::App *vocab = app->add_subcommand("vocab", "Build vocabularies and encode transcripts");
  vocab->require_subcommand(1);

  struct BuildOpts {
    std::vector<std::string> in;
    std::string out = "-";
  };
  auto b = std::make_shared<BuildOpts>();
  CLI::App *build = vocab->add_subcommand("build", "Character vocabulary of normalized corpora");
  build->add_option("--in", b->in, "Normalized text files")->required();
  build->add_option("--out", b->out, "Vocabulary file, one symbol per line")->capture_default_str();
  table->Add(build, [b] {
    std::vector<std::vector<std::string>> corpora;
    for (const std::string &path : b->in) corpora.push_back(ReadInputLines(path));
    std::string out;
    for (const std::string &s : BuildVocab(corpora).Listing()) out += s + "\n";
    WriteOutput(b->out, out);
  });

  struct EncodeOpts {
    std::string vocab, in = "-", out = "-";
  };
  auto e = std::make_shared<EncodeOpts>();
  CLI::App *encode = vocab->add_subcommand("encode", "Label ids of normalized transcripts");
  encode->add_option("--vocab", e->vocab, "Vocabulary file")->required();
  encode->add_option("--in", e->in, "Normalized text file")->capture_default_str();
  encode->add_option("--out", e->out, "Output, space-separated ids per line")->capture_default_str();
  table->Add(encode, [e] {
    const Vocabulary v = LoadVocabulary(e->vocab);
    std::string out;
    for (const std::string &line : ReadInputLines(e->in)) {
      std::string row;
      for (int id : EncodeTranscript(line, v)) row += (row.empty() ? "" : " ") + std::to_string(id);
      out += row + "\n";
    }
    WriteOutput(e->out, out);
  });
}

void AddPgrm(CLI::App *app, const GlobalOptions *global, CommandTable *table) {
  struct Opts {
    std::string in, vocab;
  };
  auto o = std::make_shared<Opts>();
  CLI::App *cmd = app->add_subcommand("pgrm", "Check posteriorgram files and print their shapes");
  cmd->add_option("--in", o->in, "Posteriorgram file or directory")->required();
  cmd->add_option("--vocab", o->vocab, "Expected vocabulary file");
  table->Add(cmd, [o, global] {
    std::optional<Vocabulary> expected;
    if (!o->vocab.empty()) expected = LoadVocabulary(o->vocab);
    for (const auto &[id, path] : ListPosteriorgrams(o->in)) {
      const Posteriorgram p = LoadPosteriorgram(path, expected ? &*expected : nullptr);
      ValidatePosteriorgram(p);
      Emit(*global,
           id + "\tframes " + std::to_string(p.num_frames()) + "\tvocab " +
               std::to_string(p.vocab.size()) + "\trate " + Fixed2(p.frame_rate_hz) + "\n",
           {{"id", id},
            {"frames", p.num_frames()},
            {"vocab", p.vocab.size()},
            {"frame_rate_hz", p.frame_rate_hz}});
    }
  });
}

void AddSegment(CLI::App *app, CommandTable *table) {
  struct Opts {
    std::string in, out, chunk_dir, prefix;
    SegmenterConfig config;
  };
  auto o = std::make_shared<Opts>();
  CLI::App *cmd = app->add_subcommand("segment", "Split a recording into speech chunks");
  cmd->add_option("--in", o->in, "Input WAV file")->required();
  cmd->add_option("--out", o->out, "Output manifest")->required();
  cmd->add_option("--frame-ms", o->config.frame_ms, "Analysis frame length")->capture_default_str();
  cmd->add_option("--threshold-db", o->config.energy_threshold_db,
                  "Speech threshold relative to the loudest frame")
      ->capture_default_str();
  cmd->add_option("--min-silence-ms", o->config.min_silence_ms, "Shortest pause that splits")
      ->capture_default_str();
  cmd->add_option("--min-chunk-s", o->config.min_chunk_s, "Shortest chunk kept")
      ->capture_default_str();
  cmd->add_option("--max-chunk-s", o->config.max_chunk_s, "Longest chunk")->capture_default_str();
  cmd->add_option("--chunk-dir", o->chunk_dir,
                  "Directory for the chunk WAV files (default: <out>.chunks)");
  cmd->add_option("--id-prefix", o->prefix, "Utterance id prefix (default: input file stem)");
  table->Add(cmd, [o] {
    const Audio audio = LoadWav(o->in);
    const std::vector<Chunk> chunks = Segment(audio.samples, audio.sample_rate_hz, o->config);
    const fs::path dir = o->chunk_dir.empty() ? fs::path(o->out + ".chunks") : fs::path(o->chunk_dir);
    const std::string prefix = o->prefix.empty() ? fs::path(o->in).stem().string() : o->prefix;
    fs::create_directories(dir);
    Manifest manifest;
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      const auto begin = static_cast<std::size_t>(chunks[i].start_s * audio.sample_rate_hz + 0.5);
      const auto end = std::min(audio.samples.size(),
                                static_cast<std::size_t>(chunks[i].end_s * audio.sample_rate_hz + 0.5));
      Audio piece{audio.sample_rate_hz,
                  std::vector<float>(audio.samples.begin() + begin, audio.samples.begin() + end)};
      char id[32];
      std::snprintf(id, sizeof id, "-%04zu", i);
      Utterance u;
      u.id = prefix + id;
      u.audio_path = (dir / (u.id + ".wav")).string();
      u.duration_s = piece.duration_s();
      u.split = Split::kUnlabeled;
      SaveWav(*u.audio_path, piece);
      manifest.push_back(std::move(u));
    }
    SaveManifest(o->out, manifest);
    spdlog::info("{} chunks from {:.2f} s of audio", chunks.size(), audio.duration_s());
  });
}

}  // namespace

void AddCorpusCommands(CLI::App *app, const GlobalOptions *global, CommandTable *table) {
  AddNormalize(app, table);
  AddTags(app, global, table);
  AddStats(app, global, table);
  AddVocab(app, table);
  AddPgrm(app, global, table);
  AddSegment(app, table);
}

}  // namespace cstk::toolkit
