// src/ctc/greedy-decode.cc

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

#include <string>

#include "cstk/base/error.h"
#include "cstk/ctc/decoder.h"
#include "cstk/kernels/kernels.h"

namespace cstk {

std::vector<int> BestPath(const Matrix &logprobs) {
  std::vector<int> path;
  path.reserve(logprobs.rows());
  for (std::size_t t = 0; t < logprobs.rows(); ++t)
    path.push_back(static_cast<int>(kernels::Argmax(logprobs.row(t))));
  return path;
}

std::vector<int> CollapsePath(const std::vector<int> &path) {
  std::vector<int> out;
  int prev = -1;
  for (int id : path) {
    if (id != prev && id != 0) out.push_back(id);
    prev = id;
  }
  return out;
}

std::string GreedyDecode(const Matrix &logprobs, const Vocabulary &vocab) {
  if (logprobs.cols() != vocab.size())
    throw Error(ErrorKind::kShapeMismatch, "frames have " + std::to_string(logprobs.cols()) +
                                               " columns, vocabulary has " +
                                               std::to_string(vocab.size()));
  return DecodeLabels(CollapsePath(BestPath(logprobs)), vocab);
}

}  // namespace cstk
