// include/cstk/ctc/ctc-loss.h

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

#ifndef CSTK_CTC_CTC_LOSS_H_
#define CSTK_CTC_CTC_LOSS_H_

#include <span>

#include "cstk/base/matrix.h"

namespace cstk {

struct CtcLossResult {
  double loss = 0.0;  // -ln P(target | frames); +infinity when no alignment fits
  Matrix grad;        // d loss / d logprobs, same shape as the input
};

/// Connectionist temporal classification loss over log-normalized frames
/// (T x V, blank at column 0) for a label sequence without blanks. The
/// gradient treats each log-probability as a free variable, so grad(t, k) is
/// minus the posterior occupancy of symbol k at frame t. When the target
/// cannot be aligned within T frames the loss is +infinity and grad is zero.
/// Throws BlankInTarget or VocabOverflow for bad target ids.
CtcLossResult CtcLoss(const Matrix &logprobs, std::span<const int> target);

/// Minimum number of frames that can carry `target`: its length plus one
/// separating blank per adjacent repeated pair.
std::size_t CtcMinFrames(std::span<const int> target);

}  // namespace cstk

#endif  // CSTK_CTC_CTC_LOSS_H_
