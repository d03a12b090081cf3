// src/mixer/mixer-model.cc

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

#include "cstk/mixer/mixer-model.h"

#include <cmath>
#include <random>

#include "cstk/base/bytes.h"
#include "cstk/base/error.h"
#include "cstk/base/file-util.h"
#include "cstk/ctc/ctc-loss.h"
#include "cstk/kernels/kernels.h"

namespace cstk {

namespace {

std::size_t LayerInput(const MixerDims &dims, std::size_t layer) {
  return layer == 0 ? dims.input : 2 * dims.hidden;
}

double Sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// y = W x (+ y), W is rows x cols.
void Gemv(const double *w, std::size_t rows, std::size_t cols, const double *x, double *y,
          bool accumulate) {
  kernels::Active().gemv(w, rows, cols, x, y, accumulate);
}

// y += W^T x.
void GemvT(const double *w, std::size_t rows, std::size_t cols, const double *x, double *y) {
  kernels::Active().gemv_t(w, rows, cols, x, y);
}

// dW += d x^T.
void Outer(const double *d, std::size_t rows, const double *x, std::size_t cols, double *dw) {
  const kernels::KernelTable &k = kernels::Active();
  for (std::size_t r = 0; r < rows; ++r)
    if (d[r] != 0.0) k.axpy(d[r], x, dw + r * cols, cols);
}

// Activations of one direction of one layer, indexed by frame.
struct DirectionCache {
  Matrix gates;  // T x 4H after the nonlinearities
  Matrix cell;   // T x H
  Matrix tanh_cell;
  Matrix hidden;
};

struct ForwardCache {
  std::vector<Matrix> layer_input;  // per layer, T x in
  std::vector<DirectionCache> dirs;  // layer * 2 + direction
  Matrix top;                        // T x 2H, input to the output layer
  Matrix logprobs;
};

void RunDirection(const MixerParams &p, std::size_t layer, std::size_t dir, const Matrix &x,
                  DirectionCache *cache) {
  const std::size_t frames = x.rows(), h = p.dims().hidden;
  const MixerParams::LstmBlock blk = p.Lstm(layer, dir);
  const double *v = p.values().data();
  cache->gates = Matrix(frames, 4 * h);
  cache->cell = Matrix(frames, h);
  cache->tanh_cell = Matrix(frames, h);
  cache->hidden = Matrix(frames, h);
  std::vector<double> zero(h, 0.0);
  for (std::size_t step = 0; step < frames; ++step) {
    const std::size_t t = dir == 0 ? step : frames - 1 - step;
    const double *h_prev = step == 0 ? zero.data()
                                     : cache->hidden.row(dir == 0 ? t - 1 : t + 1).data();
    const double *c_prev = step == 0 ? zero.data()
                                     : cache->cell.row(dir == 0 ? t - 1 : t + 1).data();
    double *a = cache->gates.row(t).data();
    std::copy(v + blk.b, v + blk.b + 4 * h, a);
    Gemv(v + blk.w, 4 * h, blk.input, x.row(t).data(), a, true);
    Gemv(v + blk.u, 4 * h, h, h_prev, a, true);
    double *c = cache->cell.row(t).data();
    double *tc = cache->tanh_cell.row(t).data();
    double *hid = cache->hidden.row(t).data();
    for (std::size_t j = 0; j < h; ++j) {
      const double i = Sigmoid(a[j]);
      const double f = Sigmoid(a[h + j]);
      const double g = std::tanh(a[2 * h + j]);
      const double o = Sigmoid(a[3 * h + j]);
      a[j] = i;
      a[h + j] = f;
      a[2 * h + j] = g;
      a[3 * h + j] = o;
      c[j] = f * c_prev[j] + i * g;
      tc[j] = std::tanh(c[j]);
      hid[j] = o * tc[j];
    }
  }
}

Matrix Concat(const Matrix &fwd, const Matrix &bwd) {
  Matrix out(fwd.rows(), fwd.cols() + bwd.cols());
  for (std::size_t t = 0; t < fwd.rows(); ++t) {
    std::copy(fwd.row(t).begin(), fwd.row(t).end(), out.row(t).begin());
    std::copy(bwd.row(t).begin(), bwd.row(t).end(), out.row(t).begin() + fwd.cols());
  }
  return out;
}

void CheckFeatures(const MixerParams &params, const Matrix &features) {
  if (params.size() == 0) throw Error(ErrorKind::kShapeMismatch, "empty mixer parameters");
  if (features.cols() != params.dims().input)
    throw Error(ErrorKind::kShapeMismatch,
                "features have width " + std::to_string(features.cols()) + ", mixer expects " +
                    std::to_string(params.dims().input));
}

ForwardCache Forward(const MixerParams &p, const Matrix &features) {
  CheckFeatures(p, features);
  ForwardCache cache;
  cache.dirs.resize(2 * kMixerLayers);
  Matrix input = features;
  for (std::size_t layer = 0; layer < kMixerLayers; ++layer) {
    for (std::size_t dir = 0; dir < 2; ++dir)
      RunDirection(p, layer, dir, input, &cache.dirs[2 * layer + dir]);
    cache.layer_input.push_back(std::move(input));
    input = Concat(cache.dirs[2 * layer].hidden, cache.dirs[2 * layer + 1].hidden);
  }
  cache.top = std::move(input);
  const MixerDims &d = p.dims();
  const double *v = p.values().data();
  cache.logprobs = Matrix(features.rows(), d.output);
  for (std::size_t t = 0; t < features.rows(); ++t) {
    double *z = cache.logprobs.row(t).data();
    std::copy(v + p.out_b(), v + p.out_b() + d.output, z);
    Gemv(v + p.out_w(), d.output, 2 * d.hidden, cache.top.row(t).data(), z, true);
    kernels::LogSoftmax(cache.logprobs.row(t));
  }
  return cache;
}

// Backpropagates d_hidden (T x H) through one direction; accumulates
// parameter gradients and adds the input gradient into d_input.
void BackDirection(const MixerParams &p, std::size_t layer, std::size_t dir, const Matrix &x,
                   const DirectionCache &cache, const Matrix &d_hidden, double *grad,
                   Matrix *d_input) {
  const std::size_t frames = x.rows(), h = p.dims().hidden;
  const MixerParams::LstmBlock blk = p.Lstm(layer, dir);
  const double *v = p.values().data();
  std::vector<double> dh_next(h, 0.0), dc_next(h, 0.0), da(4 * h), zero(h, 0.0);
  for (std::size_t step = frames; step-- > 0;) {
    const std::size_t t = dir == 0 ? step : frames - 1 - step;
    const bool first = step == 0;
    const std::size_t prev = dir == 0 ? t - 1 : t + 1;
    const double *h_prev = first ? zero.data() : cache.hidden.row(prev).data();
    const double *c_prev = first ? zero.data() : cache.cell.row(prev).data();
    const double *a = cache.gates.row(t).data();
    const double *tc = cache.tanh_cell.row(t).data();
    for (std::size_t j = 0; j < h; ++j) {
      const double i = a[j], f = a[h + j], g = a[2 * h + j], o = a[3 * h + j];
      const double dh = d_hidden(t, j) + dh_next[j];
      const double d_o = dh * tc[j];
      const double dc = dh * o * (1.0 - tc[j] * tc[j]) + dc_next[j];
      da[j] = dc * g * i * (1.0 - i);
      da[h + j] = dc * c_prev[j] * f * (1.0 - f);
      da[2 * h + j] = dc * i * (1.0 - g * g);
      da[3 * h + j] = d_o * o * (1.0 - o);
      dc_next[j] = dc * f;
    }
    Outer(da.data(), 4 * h, x.row(t).data(), blk.input, grad + blk.w);
    Outer(da.data(), 4 * h, h_prev, h, grad + blk.u);
    kernels::Active().axpy(1.0, da.data(), grad + blk.b, 4 * h);
    if (d_input != nullptr) GemvT(v + blk.w, 4 * h, blk.input, da.data(), d_input->row(t).data());
    std::fill(dh_next.begin(), dh_next.end(), 0.0);
    GemvT(v + blk.u, 4 * h, h, da.data(), dh_next.data());
  }
}

}  // namespace

std::size_t MixerParamCount(const MixerDims &dims) {
  const std::size_t h = dims.hidden;
  std::size_t n = 0;
  for (std::size_t layer = 0; layer < kMixerLayers; ++layer)
    n += 2 * (4 * h * LayerInput(dims, layer) + 4 * h * h + 4 * h);
  return n + dims.output * 2 * h + dims.output;
}

MixerParams::MixerParams(MixerDims dims) : dims_(dims), values_(MixerParamCount(dims), 0.0) {
  if (dims.input == 0 || dims.hidden == 0 || dims.output == 0)
    throw Error(ErrorKind::kInvalidConfig, "mixer dimensions must be positive");
}

MixerParams MixerParams::Random(MixerDims dims, std::uint64_t seed) {
  MixerParams p(dims);
  const double r = 1.0 / std::sqrt(static_cast<double>(dims.hidden));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-r, r);
  for (double &v : p.values_) v = u(rng);
  return p;
}

MixerParams::LstmBlock MixerParams::Lstm(std::size_t layer, std::size_t direction) const {
  const std::size_t h = dims_.hidden;
  std::size_t offset = 0;
  for (std::size_t l = 0; l <= layer; ++l) {
    const std::size_t in = LayerInput(dims_, l);
    const std::size_t block = 4 * h * in + 4 * h * h + 4 * h;
    for (std::size_t d = 0; d < 2; ++d) {
      if (l == layer && d == direction)
        return {in, offset, offset + 4 * h * in, offset + 4 * h * in + 4 * h * h};
      offset += block;
    }
  }
  return {};
}

std::size_t MixerParams::out_w() const {
  return values_.size() - dims_.output * 2 * dims_.hidden - dims_.output;
}

std::size_t MixerParams::out_b() const { return values_.size() - dims_.output; }

Matrix MixerForward(const MixerParams &params, const Matrix &features) {
  return Forward(params, features).logprobs;
}

MixerLossResult MixerBackward(const MixerParams &params, const Matrix &features,
                              std::span<const int> target) {
  const ForwardCache cache = Forward(params, features);
  const CtcLossResult ctc = CtcLoss(cache.logprobs, target);
  MixerLossResult result;
  result.loss = ctc.loss;
  result.grad.assign(params.size(), 0.0);
  if (!std::isfinite(ctc.loss)) return result;

  const MixerDims &d = params.dims();
  const std::size_t frames = features.rows(), h = d.hidden;
  double *grad = result.grad.data();
  const double *v = params.values().data();

  // Through the log-softmax: dz = g - softmax * sum(g).
  Matrix d_top(frames, 2 * h);
  std::vector<double> dz(d.output);
  for (std::size_t t = 0; t < frames; ++t) {
    double sum = 0.0;
    for (std::size_t k = 0; k < d.output; ++k) sum += ctc.grad(t, k);
    for (std::size_t k = 0; k < d.output; ++k)
      dz[k] = ctc.grad(t, k) - std::exp(cache.logprobs(t, k)) * sum;
    Outer(dz.data(), d.output, cache.top.row(t).data(), 2 * h, grad + params.out_w());
    kernels::Active().axpy(1.0, dz.data(), grad + params.out_b(), d.output);
    GemvT(v + params.out_w(), d.output, 2 * h, dz.data(), d_top.row(t).data());
  }

  Matrix d_out = std::move(d_top);
  for (std::size_t layer = kMixerLayers; layer-- > 0;) {
    const Matrix &x = cache.layer_input[layer];
    Matrix d_in(frames, x.cols());
    for (std::size_t dir = 0; dir < 2; ++dir) {
      Matrix d_hidden(frames, h);
      for (std::size_t t = 0; t < frames; ++t)
        for (std::size_t j = 0; j < h; ++j) d_hidden(t, j) = d_out(t, dir * h + j);
      BackDirection(params, layer, dir, x, cache.dirs[2 * layer + dir], d_hidden, grad,
                    layer > 0 ? &d_in : nullptr);
    }
    d_out = std::move(d_in);
  }
  return result;
}

std::string WriteMixer(const MixerParams &params) {
  ByteWriter w;
  w.Bytes(kMixerMagic);
  w.U16(kMixerVersion);
  w.U32(static_cast<std::uint32_t>(params.dims().input));
  w.U32(static_cast<std::uint32_t>(params.dims().hidden));
  w.U32(static_cast<std::uint32_t>(params.dims().output));
  for (double v : params.values()) w.F32(static_cast<float>(v));
  return w.release();
}

MixerParams ReadMixer(std::string_view bytes) {
  ByteReader r(bytes);
  if (bytes.size() < kMixerMagic.size() || r.Bytes(kMixerMagic.size()) != kMixerMagic)
    throw Error(ErrorKind::kBadMagic, "not a mixer parameter file");
  const std::uint16_t version = r.U16();
  if (version != kMixerVersion)
    throw Error(ErrorKind::kInvalidConfig, "unsupported mixer version " + std::to_string(version));
  MixerDims dims;
  dims.input = r.U32();
  dims.hidden = r.U32();
  dims.output = r.U32();
  MixerParams p(dims);
  const std::size_t expected = p.size() * 4;
  if (r.remaining() != expected)
    throw Error(ErrorKind::kTruncatedFile, "expected " + std::to_string(expected) +
                                               " parameter bytes, found " +
                                               std::to_string(r.remaining()));
  for (double &v : p.values()) v = r.F32();
  return p;
}

void SaveMixer(const std::filesystem::path &path, const MixerParams &params) {
  WriteFile(path, WriteMixer(params));
}

MixerParams LoadMixer(const std::filesystem::path &path) { return ReadMixer(ReadFile(path)); }

}  // namespace cstk
