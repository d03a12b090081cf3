// src/kernels/dispatch.cc

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

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string_view>
#include <utility>

#include "cstk/kernels/kernels.h"

namespace cstk {
namespace kernels {

#if defined(CSTK_HAVE_AVX2)
const KernelTable *Avx2KernelsUnchecked();
#endif
#if defined(CSTK_HAVE_NEON)
const KernelTable *NeonKernelsUnchecked();
#endif

const KernelTable *Avx2Kernels() {
#if defined(CSTK_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return supported ? Avx2KernelsUnchecked() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable *NeonKernels() {
#if defined(CSTK_HAVE_NEON)
  return NeonKernelsUnchecked();
#else
  return nullptr;
#endif
}

namespace {

const KernelTable *Select() {
  const char *env = std::getenv("CSTK_KERNELS");
  if (env != nullptr && std::string_view(env) == "scalar")
    return &ScalarKernels();
  if (const KernelTable *t = Avx2Kernels()) return t;
  if (const KernelTable *t = NeonKernels()) return t;
  return &ScalarKernels();
}

std::atomic<const KernelTable *> &Slot() {
  static std::atomic<const KernelTable *> slot{Select()};
  return slot;
}

}  // namespace

const KernelTable &Active() {
  return *Slot().load(std::memory_order_acquire);
}

void SetActive(const KernelTable &table) {
  Slot().store(&table, std::memory_order_release);
}

double LogSumExp(std::span<const double> x) {
  const double m = Max(x);
  if (!std::isfinite(m)) return m;
  double sum = 0.0;
  for (double v : x) sum += std::exp(v - m);
  return m + std::log(sum);
}

double LogAdd(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log1p(std::exp(b - a));
}

void LogSoftmax(std::span<double> x) {
  const double z = LogSumExp(x);
  for (double &v : x) v -= z;
}

}  // namespace kernels
}  // namespace cstk
