// src/ctc/ctc-loss.cc

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

#include "cstk/ctc/ctc-loss.h"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "cstk/base/error.h"
#include "cstk/kernels/kernels.h"

namespace cstk {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

std::size_t CtcMinFrames(std::span<const int> target) {
  std::size_t n = target.size();
  for (std::size_t i = 1; i < target.size(); ++i)
    if (target[i] == target[i - 1]) ++n;
  return n;
}

CtcLossResult CtcLoss(const Matrix &logprobs, std::span<const int> target) {
  const std::size_t num_frames = logprobs.rows();
  const std::size_t vocab = logprobs.cols();
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (target[i] == 0)
      throw Error(ErrorKind::kBlankInTarget, "blank at target position " + std::to_string(i));
    if (target[i] < 0 || static_cast<std::size_t>(target[i]) >= vocab)
      throw Error(ErrorKind::kVocabOverflow, "target id " + std::to_string(target[i]) +
                                                 " at position " + std::to_string(i) +
                                                 " outside vocabulary of " + std::to_string(vocab));
  }

  CtcLossResult result;
  result.grad = Matrix(num_frames, vocab);
  result.loss = std::numeric_limits<double>::infinity();
  if (num_frames < CtcMinFrames(target)) return result;

  // Extended label sequence: blank, l1, blank, l2, ..., blank.
  const std::size_t num_states = 2 * target.size() + 1;
  std::vector<int> ext(num_states, 0);
  for (std::size_t i = 0; i < target.size(); ++i) ext[2 * i + 1] = target[i];
  auto can_skip = [&](std::size_t s) { return s >= 2 && ext[s] != 0 && ext[s] != ext[s - 2]; };

  // alpha(t, s) includes the emission at t; beta(t, s) covers frames after t.
  Matrix alpha(num_frames, num_states, kNegInf);
  Matrix beta(num_frames, num_states, kNegInf);
  alpha(0, 0) = logprobs(0, 0);
  if (num_states > 1) alpha(0, 1) = logprobs(0, static_cast<std::size_t>(ext[1]));
  for (std::size_t t = 1; t < num_frames; ++t) {
    for (std::size_t s = 0; s < num_states; ++s) {
      double a = alpha(t - 1, s);
      if (s >= 1) a = kernels::LogAdd(a, alpha(t - 1, s - 1));
      if (can_skip(s)) a = kernels::LogAdd(a, alpha(t - 1, s - 2));
      if (a != kNegInf) alpha(t, s) = a + logprobs(t, static_cast<std::size_t>(ext[s]));
    }
  }
  const std::size_t last = num_frames - 1;
  beta(last, num_states - 1) = 0.0;
  if (num_states > 1) beta(last, num_states - 2) = 0.0;
  for (std::size_t t = last; t-- > 0;) {
    for (std::size_t s = 0; s < num_states; ++s) {
      auto next = [&](std::size_t r) {
        return beta(t + 1, r) + logprobs(t + 1, static_cast<std::size_t>(ext[r]));
      };
      double b = next(s);
      if (s + 1 < num_states) b = kernels::LogAdd(b, next(s + 1));
      if (s + 2 < num_states && can_skip(s + 2)) b = kernels::LogAdd(b, next(s + 2));
      beta(t, s) = b;
    }
  }

  double log_z = alpha(last, num_states - 1);
  if (num_states > 1) log_z = kernels::LogAdd(log_z, alpha(last, num_states - 2));
  if (log_z == kNegInf) return result;
  result.loss = -log_z;

  for (std::size_t t = 0; t < num_frames; ++t) {
    for (std::size_t s = 0; s < num_states; ++s) {
      const double occ = alpha(t, s) + beta(t, s);
      if (occ == kNegInf) continue;
      result.grad(t, static_cast<std::size_t>(ext[s])) -= std::exp(occ - log_z);
    }
  }
  return result;
}

}  // namespace cstk
