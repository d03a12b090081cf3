// src/mixer/mixer-train.cc

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

#include "cstk/mixer/mixer-train.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <thread>

#include "cstk/base/error.h"
#include "cstk/ctc/ctc-loss.h"

namespace cstk {

namespace {

bool Fits(const MixerExample &e) { return CtcMinFrames(e.target) <= e.features.rows(); }

// Runs fn(i) for i in [0, n) over `threads` workers.
template <typename Fn>
void ParallelFor(std::size_t n, int threads, Fn fn) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  for (std::thread &t : pool) t.join();
}

}  // namespace

void ValidateMixerTrainConfig(const MixerTrainConfig &c) {
  auto fail = [](const std::string &what) {
    throw Error(ErrorKind::kInvalidConfig, what + " must be positive");
  };
  if (c.hidden == 0) fail("hidden");
  if (!(c.learning_rate >= 0.0)) throw Error(ErrorKind::kInvalidConfig, "learning_rate must be >= 0");
  if (!(c.adam_beta1 > 0.0 && c.adam_beta1 < 1.0) || !(c.adam_beta2 > 0.0 && c.adam_beta2 < 1.0))
    throw Error(ErrorKind::kInvalidConfig, "Adam betas must lie in (0, 1)");
  if (!(c.adam_epsilon > 0.0)) fail("adam_epsilon");
  if (!(c.clip_norm > 0.0)) fail("clip_norm");
  if (c.batch_size == 0) fail("batch_size");
  if (c.max_epochs <= 0) fail("max_epochs");
  if (c.patience <= 0) fail("patience");
  if (c.threads <= 0) fail("threads");
}

double MixerDatasetLoss(const MixerParams &params, const std::vector<MixerExample> &examples,
                        int threads) {
  std::vector<double> losses(examples.size(), 0.0);
  ParallelFor(examples.size(), threads, [&](std::size_t i) {
    if (!Fits(examples[i])) return;
    losses[i] = CtcLoss(MixerForward(params, examples[i].features), examples[i].target).loss;
  });
  double total = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < examples.size(); ++i) {
    if (!Fits(examples[i])) continue;
    total += losses[i];
    ++n;
  }
  return n == 0 ? 0.0 : total / static_cast<double>(n);
}

MixerTrainResult TrainMixer(const std::vector<MixerExample> &train,
                            const std::vector<MixerExample> &dev, std::size_t vocab_size,
                            const MixerTrainConfig &config, const MixerParams *init,
                            const std::function<void(const EpochRecord &)> &on_epoch) {
  ValidateMixerTrainConfig(config);
  if (train.empty()) throw Error(ErrorKind::kEmptyCorpus, "no training examples");
  const std::size_t width = train[0].features.cols();
  for (const auto *set : {&train, &dev})
    for (const MixerExample &e : *set) {
      if (e.features.cols() != width)
        throw Error(ErrorKind::kShapeMismatch, "examples have feature widths " +
                                                   std::to_string(width) + " and " +
                                                   std::to_string(e.features.cols()));
      for (int id : e.target)
        if (id <= 0 || static_cast<std::size_t>(id) >= vocab_size)
          throw Error(ErrorKind::kVocabOverflow, "target id " + std::to_string(id) +
                                                     " outside vocabulary of " +
                                                     std::to_string(vocab_size));
    }

  MixerTrainResult result;
  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < train.size(); ++i)
    if (Fits(train[i])) usable.push_back(i);
  result.skipped = train.size() - usable.size();
  if (usable.empty()) throw Error(ErrorKind::kEmptyCorpus, "no training example fits its frames");

  const MixerDims dims{width, config.hidden, vocab_size};
  MixerParams params = init != nullptr ? *init : MixerParams::Random(dims, config.seed);
  if (params.dims() != dims)
    throw Error(ErrorKind::kShapeMismatch, "initial parameters do not match F=" +
                                               std::to_string(width) + " H=" +
                                               std::to_string(config.hidden) + " V=" +
                                               std::to_string(vocab_size));

  const std::vector<MixerExample> &select = dev.empty() ? train : dev;
  auto record = [&](int epoch, double train_loss) {
    EpochRecord r{epoch, train_loss, MixerDatasetLoss(params, select, config.threads)};
    if (!std::isfinite(r.train_loss) || !std::isfinite(r.dev_loss))
      throw Error(ErrorKind::kDiverged, "non-finite loss at epoch " + std::to_string(epoch));
    result.history.push_back(r);
    if (on_epoch) on_epoch(r);
    return r.dev_loss;
  };

  double best = record(0, MixerDatasetLoss(params, train, config.threads));
  result.params = params;
  result.best_epoch = 0;

  const std::size_t n = params.size();
  std::vector<double> m(n, 0.0), v(n, 0.0), grad(n);
  std::vector<std::vector<double>> item_grads;
  std::vector<double> item_loss;
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ull);
  std::uint64_t step = 0;
  int since_best = 0;

  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    std::vector<std::size_t> order = usable;
    std::shuffle(order.begin(), order.end(), rng);
    double epoch_loss = 0.0;
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      const std::size_t count = std::min(config.batch_size, order.size() - start);
      item_grads.resize(count);
      item_loss.assign(count, 0.0);
      ParallelFor(count, config.threads, [&](std::size_t j) {
        const MixerExample &e = train[order[start + j]];
        MixerLossResult r = MixerBackward(params, e.features, e.target);
        item_loss[j] = r.loss;
        item_grads[j] = std::move(r.grad);
      });
      std::fill(grad.begin(), grad.end(), 0.0);
      double batch_loss = 0.0;
      for (std::size_t j = 0; j < count; ++j) {
        if (!std::isfinite(item_loss[j]))
          throw Error(ErrorKind::kDiverged, "non-finite loss at epoch " + std::to_string(epoch));
        batch_loss += item_loss[j];
        for (std::size_t k = 0; k < n; ++k) grad[k] += item_grads[j][k];
      }
      epoch_loss += batch_loss;
      const double scale = 1.0 / static_cast<double>(count);
      double norm2 = 0.0;
      for (double &g : grad) {
        g *= scale;
        norm2 += g * g;
      }
      const double norm = std::sqrt(norm2);
      if (norm > config.clip_norm)
        for (double &g : grad) g *= config.clip_norm / norm;

      ++step;
      const double c1 = 1.0 - std::pow(config.adam_beta1, static_cast<double>(step));
      const double c2 = 1.0 - std::pow(config.adam_beta2, static_cast<double>(step));
      std::span<double> p = params.values();
      for (std::size_t k = 0; k < n; ++k) {
        m[k] = config.adam_beta1 * m[k] + (1.0 - config.adam_beta1) * grad[k];
        v[k] = config.adam_beta2 * v[k] + (1.0 - config.adam_beta2) * grad[k] * grad[k];
        p[k] -= config.learning_rate * (m[k] / c1) / (std::sqrt(v[k] / c2) + config.adam_epsilon);
      }
    }
    for (double x : params.values())
      if (!std::isfinite(x))
        throw Error(ErrorKind::kDiverged, "non-finite parameter at epoch " + std::to_string(epoch));

    const double dev_loss = record(epoch, epoch_loss / static_cast<double>(order.size()));
    if (dev_loss < best) {
      best = dev_loss;
      result.params = params;
      result.best_epoch = epoch;
      since_best = 0;
    } else if (++since_best >= config.patience) {
      break;
    }
  }
  return result;
}

}  // namespace cstk
