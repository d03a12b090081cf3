// src/kernels/kernels-scalar.cc

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

#include <cmath>
#include <limits>

#include "cstk/kernels/kernels.h"

namespace cstk {
namespace kernels {

namespace {

double DotScalar(const double *x, const double *y, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

void AxpyScalar(double alpha, const double *x, double *y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void GemvScalar(const double *w, std::size_t rows, std::size_t cols,
                const double *x, double *y, bool accumulate) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double v = DotScalar(w + r * cols, x, cols);
    y[r] = accumulate ? y[r] + v : v;
  }
}

void GemvTransposedScalar(const double *w, std::size_t rows, std::size_t cols,
                          const double *x, double *y) {
  for (std::size_t r = 0; r < rows; ++r) {
    if (x[r] != 0.0) AxpyScalar(x[r], w + r * cols, y, cols);
  }
}

double MaxScalar(const double *x, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] > m) m = x[i];
  return m;
}

std::size_t ArgmaxScalar(const double *x, std::size_t n) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (x[i] > x[best]) best = i;
  return best;
}

}  // namespace

const KernelTable &ScalarKernels() {
  static const KernelTable table{"scalar",  DotScalar, AxpyScalar,
                                 GemvScalar, GemvTransposedScalar,
                                 MaxScalar, ArgmaxScalar};
  return table;
}

}  // namespace kernels
}  // namespace cstk
