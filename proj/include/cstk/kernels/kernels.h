// include/cstk/kernels/kernels.h

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

#ifndef CSTK_KERNELS_KERNELS_H_
#define CSTK_KERNELS_KERNELS_H_

// Data-parallel inner loops used by the decoder, the CTC recursions and the
// mixer network. Each kernel has a portable scalar reference in
// kernels-scalar.cc and optional vector variants (AVX2+FMA on x86-64, NEON on
// AArch64). The variant is chosen once at startup from the CPU's feature
// flags; setting CSTK_KERNELS=scalar in the environment forces the reference
// path.

#include <cstddef>
#include <span>
#include <string_view>

namespace cstk {
namespace kernels {

struct KernelTable {
  std::string_view name;
  // Returns sum_i x[i] * y[i].
  double (*dot)(const double *x, const double *y, std::size_t n);
  // y[i] += alpha * x[i].
  void (*axpy)(double alpha, const double *x, double *y, std::size_t n);
  // y[r] = (accumulate ? y[r] : 0) + sum_c w[r * cols + c] * x[c].
  void (*gemv)(const double *w, std::size_t rows, std::size_t cols,
               const double *x, double *y, bool accumulate);
  // y[c] += sum_r w[r * cols + c] * x[r].
  void (*gemv_t)(const double *w, std::size_t rows, std::size_t cols,
                 const double *x, double *y);
  // Largest element; -inf for n == 0.
  double (*max)(const double *x, std::size_t n);
  // Index of the first largest element; 0 for n == 0.
  std::size_t (*argmax)(const double *x, std::size_t n);
};

const KernelTable &ScalarKernels();

// nullptr when the variant was not compiled in or the CPU lacks the features.
const KernelTable *Avx2Kernels();
const KernelTable *NeonKernels();

// The table selected for this process.
const KernelTable &Active();

// Overrides the selection; used by equivalence tests and benchmarks.
void SetActive(const KernelTable &table);

inline double Dot(std::span<const double> x, std::span<const double> y) {
  return Active().dot(x.data(), y.data(), x.size());
}
inline void Axpy(double alpha, std::span<const double> x, std::span<double> y) {
  Active().axpy(alpha, x.data(), y.data(), x.size());
}
inline double Max(std::span<const double> x) {
  return Active().max(x.data(), x.size());
}
inline std::size_t Argmax(std::span<const double> x) {
  return Active().argmax(x.data(), x.size());
}

// log(sum exp x) with the max factored out; -inf for an empty or all -inf
// input.
double LogSumExp(std::span<const double> x);

// Two-argument log-add; exact for -inf operands.
double LogAdd(double a, double b);

// In-place log-softmax over one row.
void LogSoftmax(std::span<double> x);

}  // namespace kernels
}  // namespace cstk

#endif  // CSTK_KERNELS_KERNELS_H_
