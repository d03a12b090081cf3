// src/kernels/kernels-neon.cc

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

// AArch64 only; Advanced SIMD is mandatory there, so no runtime probe.

#include <arm_neon.h>

#include <cmath>
#include <limits>

#include "cstk/kernels/kernels.h"

namespace cstk {
namespace kernels {

namespace {

double DotNeon(const double *x, const double *y, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
  }
  double sum = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

void AxpyNeon(double alpha, const double *x, double *y, std::size_t n) {
  const float64x2_t a = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), a, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void GemvNeon(const double *w, std::size_t rows, std::size_t cols,
              const double *x, double *y, bool accumulate) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double v = DotNeon(w + r * cols, x, cols);
    y[r] = accumulate ? y[r] + v : v;
  }
}

void GemvTransposedNeon(const double *w, std::size_t rows, std::size_t cols,
                        const double *x, double *y) {
  for (std::size_t r = 0; r < rows; ++r) {
    if (x[r] != 0.0) AxpyNeon(x[r], w + r * cols, y, cols);
  }
}

double MaxNeon(const double *x, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  if (n >= 2) {
    float64x2_t acc = vld1q_f64(x);
    for (i = 2; i + 2 <= n; i += 2) acc = vmaxq_f64(acc, vld1q_f64(x + i));
    m = vmaxvq_f64(acc);
  }
  for (; i < n; ++i)
    if (x[i] > m) m = x[i];
  return m;
}

std::size_t ArgmaxNeon(const double *x, std::size_t n) {
  if (n == 0) return 0;
  const double m = MaxNeon(x, n);
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] == m) return i;
  return 0;
}

}  // namespace

const KernelTable *NeonKernelsUnchecked() {
  static const KernelTable table{"neon",   DotNeon, AxpyNeon,
                                 GemvNeon, GemvTransposedNeon,
                                 MaxNeon,  ArgmaxNeon};
  return &table;
}

}  // namespace kernels
}  // namespace cstk
