// src/kernels/kernels-avx2.cc

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

// Compiled with -mavx2 -mfma. Nothing in this file may run before
// Avx2Kernels() has confirmed CPU support.

#include <immintrin.h>

#include <cmath>
#include <limits>

#include "cstk/kernels/kernels.h"

namespace cstk {
namespace kernels {

namespace {

inline double HorizontalSum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

inline double HorizontalMax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_max_sd(lo, swapped));
}

double DotAvx2(const double *x, const double *y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4),
                           _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  double sum = HorizontalSum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

void AxpyAvx2(double alpha, const double *x, double *y, std::size_t n) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d yy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), yy));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void GemvAvx2(const double *w, std::size_t rows, std::size_t cols,
              const double *x, double *y, bool accumulate) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double v = DotAvx2(w + r * cols, x, cols);
    y[r] = accumulate ? y[r] + v : v;
  }
}

void GemvTransposedAvx2(const double *w, std::size_t rows, std::size_t cols,
                        const double *x, double *y) {
  for (std::size_t r = 0; r < rows; ++r) {
    if (x[r] != 0.0) AxpyAvx2(x[r], w + r * cols, y, cols);
  }
}

double MaxAvx2(const double *x, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  if (n >= 4) {
    __m256d acc = _mm256_loadu_pd(x);
    for (i = 4; i + 4 <= n; i += 4) acc = _mm256_max_pd(acc, _mm256_loadu_pd(x + i));
    m = HorizontalMax(acc);
  }
  for (; i < n; ++i)
    if (x[i] > m) m = x[i];
  return m;
}

std::size_t ArgmaxAvx2(const double *x, std::size_t n) {
  if (n == 0) return 0;
  const double m = MaxAvx2(x, n);
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] == m) return i;
  return 0;  // all NaN
}

}  // namespace

const KernelTable *Avx2KernelsUnchecked() {
  static const KernelTable table{"avx2",   DotAvx2, AxpyAvx2,
                                 GemvAvx2, GemvTransposedAvx2,
                                 MaxAvx2,  ArgmaxAvx2};
  return &table;
}

}  // namespace kernels
}  // namespace cstk
