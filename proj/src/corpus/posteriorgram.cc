// src/corpus/posteriorgram.cc

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

#include "cstk/corpus/posteriorgram.h"

#include <cmath>

#include "cstk/base/bytes.h"
#include "cstk/base/error.h"
#include "cstk/base/file-util.h"
#include "cstk/kernels/kernels.h"

namespace cstk {

void ValidatePosteriorgram(const Posteriorgram &pgram, double tolerance) {
  if (pgram.frames.rows() > 0 && pgram.frames.cols() != pgram.vocab.size()) {
    throw Error(ErrorKind::kInvalidPosteriorgram,
                "matrix has " + std::to_string(pgram.frames.cols()) +
                    " columns for a vocabulary of " +
                    std::to_string(pgram.vocab.size()));
  }
  if (!(pgram.frame_rate_hz > 0.0) || !std::isfinite(pgram.frame_rate_hz))
    throw Error(ErrorKind::kInvalidPosteriorgram, "frame rate must be positive");
  for (std::size_t t = 0; t < pgram.frames.rows(); ++t) {
    const double z = kernels::LogSumExp(pgram.frames.row(t));
    if (!(std::abs(z) <= tolerance)) {
      throw Error(ErrorKind::kInvalidPosteriorgram,
                  "frame " + std::to_string(t) + " sums to exp(" +
                      std::to_string(z) + ")");
    }
  }
}

std::string WritePosteriorgram(const Posteriorgram &pgram) {
  ValidatePosteriorgram(pgram);
  const std::string blob = pgram.vocab.Blob();
  ByteWriter w;
  w.Bytes(kPosteriorgramMagic);
  w.U16(kPosteriorgramVersion);
  w.U32(static_cast<std::uint32_t>(pgram.vocab.size()));
  w.U32(static_cast<std::uint32_t>(pgram.frames.rows()));
  w.F32(static_cast<float>(pgram.frame_rate_hz));
  w.U32(static_cast<std::uint32_t>(blob.size()));
  w.Bytes(blob);
  for (double v : pgram.frames.data()) w.F32(static_cast<float>(v));
  return w.release();
}

Posteriorgram ReadPosteriorgram(std::string_view bytes, const Vocabulary *expected) {
  ByteReader r(bytes);
  if (bytes.size() < kPosteriorgramMagic.size() ||
      bytes.substr(0, kPosteriorgramMagic.size()) != kPosteriorgramMagic) {
    throw Error(ErrorKind::kBadMagic, "not a posteriorgram file");
  }
  r.Bytes(kPosteriorgramMagic.size());
  const std::uint16_t version = r.U16();
  if (version != kPosteriorgramVersion) {
    throw Error(ErrorKind::kInvalidPosteriorgram,
                "unsupported version " + std::to_string(version));
  }
  const std::uint32_t num_symbols = r.U32();
  const std::uint32_t num_frames = r.U32();
  Posteriorgram pgram;
  pgram.frame_rate_hz = r.F32();
  const std::uint32_t blob_len = r.U32();
  pgram.vocab = Vocabulary::FromBlob(r.Bytes(blob_len));
  if (pgram.vocab.size() != num_symbols) {
    throw Error(ErrorKind::kInvalidPosteriorgram,
                "header says V=" + std::to_string(num_symbols) +
                    " but the vocabulary has " + std::to_string(pgram.vocab.size()));
  }
  if (expected != nullptr && !(*expected == pgram.vocab))
    throw Error(ErrorKind::kVocabMismatch, "stored vocabulary differs from the expected one");
  const std::uint64_t count = std::uint64_t{num_frames} * num_symbols;
  if (r.remaining() < count * 4) {
    throw Error(ErrorKind::kTruncatedFile,
                "payload needs " + std::to_string(count * 4) + " bytes, " +
                    std::to_string(r.remaining()) + " present");
  }
  pgram.frames = Matrix(num_frames, num_symbols);
  for (double &v : pgram.frames.data()) v = r.F32();
  return pgram;
}

void SavePosteriorgram(const std::filesystem::path &path, const Posteriorgram &pgram) {
  WriteFile(path, WritePosteriorgram(pgram));
}

Posteriorgram LoadPosteriorgram(const std::filesystem::path &path,
                                const Vocabulary *expected) {
  return ReadPosteriorgram(ReadFile(path), expected);
}

}  // namespace cstk
