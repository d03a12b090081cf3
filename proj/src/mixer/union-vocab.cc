// src/mixer/union-vocab.cc

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

#include "cstk/mixer/union-vocab.h"

#include <cmath>
#include <string>

#include "cstk/base/error.h"

namespace cstk {

UnionVocabMap BuildUnion(const std::vector<Vocabulary> &sources) {
  std::vector<char32_t> symbols;
  for (const Vocabulary &v : sources)
    for (std::size_t j = 1; j < v.size(); ++j) symbols.push_back(v.symbol(static_cast<int>(j)));
  UnionVocabMap map;
  map.union_vocab = Vocabulary::FromSymbols(std::move(symbols));
  for (const Vocabulary &v : sources) {
    std::vector<int> m(v.size(), 0);
    for (std::size_t j = 1; j < v.size(); ++j)
      m[j] = *map.union_vocab.IndexOf(v.symbol(static_cast<int>(j)));
    map.to_union.push_back(std::move(m));
  }
  return map;
}

Matrix AssembleFeatures(const std::vector<Posteriorgram> &sources, const Matrix *encoder,
                        FeatureDomain domain) {
  if (sources.empty() && encoder == nullptr)
    throw Error(ErrorKind::kShapeMismatch, "no feature sources");
  const std::size_t frames = sources.empty() ? encoder->rows() : sources[0].num_frames();
  std::size_t width = 0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (sources[i].num_frames() != frames)
      throw Error(ErrorKind::kFrameCountMismatch,
                  "source " + std::to_string(i) + " has " +
                      std::to_string(sources[i].num_frames()) + " frames, expected " +
                      std::to_string(frames));
    if (sources[i].frame_rate_hz != sources[0].frame_rate_hz)
      throw Error(ErrorKind::kInvalidConfig, "sources have different frame rates");
    width += sources[i].frames.cols();
  }
  if (encoder != nullptr) {
    if (encoder->rows() != frames)
      throw Error(ErrorKind::kFrameCountMismatch,
                  "encoder features have " + std::to_string(encoder->rows()) +
                      " frames, expected " + std::to_string(frames));
    width += encoder->cols();
  }
  Matrix out(frames, width);
  for (std::size_t t = 0; t < frames; ++t) {
    std::size_t col = 0;
    for (const Posteriorgram &p : sources) {
      for (double v : p.frames.row(t))
        out(t, col++) = domain == FeatureDomain::kProbability ? std::exp(v) : v;
    }
    if (encoder != nullptr)
      for (double v : encoder->row(t)) out(t, col++) = v;
  }
  return out;
}

}  // namespace cstk
