// tests/unit/kernels-test.cc

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
#include <random>
#include <vector>

#include "cstk/kernels/kernels.h"
#include "doctest.h"

using namespace cstk::kernels;

namespace {

std::vector<const KernelTable *> VectorVariants() {
  std::vector<const KernelTable *> out;
  if (const KernelTable *t = Avx2Kernels()) out.push_back(t);
  if (const KernelTable *t = NeonKernels()) out.push_back(t);
  return out;
}

std::vector<double> RandomVector(std::mt19937_64 &rng, std::size_t n) {
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<double> v(n);
  for (double &x : v) x = d(rng);
  return v;
}

bool Close(double a, double b, double scale) {
  return std::abs(a - b) <= 1e-12 * std::max(1.0, scale);
}

}  // namespace

TEST_CASE("active kernel table is one of the known variants") {
  const std::string_view name = Active().name;
  CHECK((name == "scalar" || name == "avx2" || name == "neon"));
  MESSAGE("active kernels: " << name);
}

TEST_CASE("vector kernels match the scalar reference") {
  const KernelTable &ref = ScalarKernels();
  std::mt19937_64 rng(42);
  for (const KernelTable *simd : VectorVariants()) {
    CAPTURE(simd->name);
    for (std::size_t n = 0; n <= 67; ++n) {
      const auto x = RandomVector(rng, n);
      const auto y = RandomVector(rng, n);
      double scale = 0;
      for (std::size_t i = 0; i < n; ++i) scale += std::abs(x[i] * y[i]);
      CHECK(Close(simd->dot(x.data(), y.data(), n), ref.dot(x.data(), y.data(), n), scale));

      auto y1 = y, y2 = y;
      simd->axpy(0.37, x.data(), y1.data(), n);
      ref.axpy(0.37, x.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(Close(y1[i], y2[i], 1.0));

      CHECK(simd->max(x.data(), n) == ref.max(x.data(), n));
      CHECK(simd->argmax(x.data(), n) == ref.argmax(x.data(), n));
    }
    for (std::size_t rows : {1u, 3u, 8u, 13u}) {
      for (std::size_t cols : {1u, 4u, 7u, 33u}) {
        const auto w = RandomVector(rng, rows * cols);
        const auto x = RandomVector(rng, cols);
        const auto xr = RandomVector(rng, rows);
        std::vector<double> a(rows, 1.0), b(rows, 1.0);
        simd->gemv(w.data(), rows, cols, x.data(), a.data(), true);
        ref.gemv(w.data(), rows, cols, x.data(), b.data(), true);
        for (std::size_t i = 0; i < rows; ++i) CHECK(Close(a[i], b[i], double(cols)));
        simd->gemv(w.data(), rows, cols, x.data(), a.data(), false);
        ref.gemv(w.data(), rows, cols, x.data(), b.data(), false);
        for (std::size_t i = 0; i < rows; ++i) CHECK(Close(a[i], b[i], double(cols)));
        std::vector<double> c(cols, 0.5), d(cols, 0.5);
        simd->gemv_t(w.data(), rows, cols, xr.data(), c.data());
        ref.gemv_t(w.data(), rows, cols, xr.data(), d.data());
        for (std::size_t i = 0; i < cols; ++i) CHECK(Close(c[i], d[i], double(rows)));
      }
    }
  }
}

TEST_CASE("argmax takes the first of equal maxima") {
  const std::vector<double> v = {1.0, 3.0, 2.0, 3.0, 3.0, 0.0, 3.0, -1.0, 3.0};
  CHECK(ScalarKernels().argmax(v.data(), v.size()) == 1);
  for (const KernelTable *simd : VectorVariants())
    CHECK(simd->argmax(v.data(), v.size()) == 1);
}

TEST_CASE("log-domain helpers") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(LogSumExp(std::vector<double>{}) == -inf);
  CHECK(LogSumExp(std::vector<double>{-inf, -inf}) == -inf);
  CHECK(LogSumExp(std::vector<double>{std::log(0.25), std::log(0.75)}) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(LogSumExp(std::vector<double>{1000.0, 1000.0}) == doctest::Approx(1000.0 + std::log(2.0)));
  CHECK(LogAdd(-inf, -inf) == -inf);
  CHECK(LogAdd(-inf, -2.0) == -2.0);
  CHECK(LogAdd(std::log(0.2), std::log(0.3)) == doctest::Approx(std::log(0.5)));
  std::vector<double> row = {1.0, 2.0, 3.0};
  LogSoftmax(row);
  CHECK(LogSumExp(row) == doctest::Approx(0.0));
  CHECK(row[2] - row[1] == doctest::Approx(1.0));
}
