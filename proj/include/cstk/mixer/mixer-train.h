// include/cstk/mixer/mixer-train.h

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

#ifndef CSTK_MIXER_MIXER_TRAIN_H_
#define CSTK_MIXER_MIXER_TRAIN_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "cstk/base/matrix.h"
#include "cstk/mixer/mixer-model.h"

namespace cstk {

struct MixerExample {
  Matrix features;          // T x F
  std::vector<int> target;  // union-vocabulary ids
};

struct MixerTrainConfig {
  std::size_t hidden = kDefaultMixerHidden;
  double learning_rate = 1e-3;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-8;
  double clip_norm = 5.0;  // on the global gradient norm of a batch
  std::size_t batch_size = 8;
  int max_epochs = 50;
  int patience = 5;  // epochs without a dev-loss improvement before stopping
  std::uint64_t seed = 0;
  // Worker threads for the per-example gradients of a batch. The batch sum is
  // always taken in example order, so results do not depend on this value.
  int threads = 1;
};

/// Throws InvalidConfig unless every field is positive (learning_rate may be
/// zero).
void ValidateMixerTrainConfig(const MixerTrainConfig &config);

struct EpochRecord {
  int epoch = 0;  // 0 is the untrained model
  double train_loss = 0.0;
  double dev_loss = 0.0;
};

struct MixerTrainResult {
  MixerParams params;  // parameters of best_epoch
  std::vector<EpochRecord> history;
  int best_epoch = 0;
  std::size_t skipped = 0;  // training examples whose target cannot fit their frames
};

/// Mean CTC loss over the examples whose targets fit their frames.
double MixerDatasetLoss(const MixerParams &params, const std::vector<MixerExample> &examples,
                        int threads = 1);

/// Mini-batch Adam with global-norm clipping. Examples are shuffled each
/// epoch from `seed`. After every epoch the dev loss (the train loss when dev
/// is empty) is compared to the best so far; training stops after `patience`
/// epochs without improvement or at max_epochs and returns the best
/// parameters. The network has `vocab_size` outputs; `init` replaces the
/// seeded random initialization and must have matching dimensions. Throws
/// EmptyCorpus for an empty train set, ShapeMismatch for inconsistent widths
/// and Diverged (naming the epoch) on a non-finite loss or parameter.
/// `on_epoch` is called after every history record.
MixerTrainResult TrainMixer(const std::vector<MixerExample> &train,
                            const std::vector<MixerExample> &dev, std::size_t vocab_size,
                            const MixerTrainConfig &config, const MixerParams *init = nullptr,
                            const std::function<void(const EpochRecord &)> &on_epoch = {});

}  // namespace cstk

#endif  // CSTK_MIXER_MIXER_TRAIN_H_
