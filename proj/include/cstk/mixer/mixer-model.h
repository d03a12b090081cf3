// include/cstk/mixer/mixer-model.h

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

#ifndef CSTK_MIXER_MIXER_MODEL_H_
#define CSTK_MIXER_MIXER_MODEL_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cstk/base/matrix.h"

namespace cstk {

struct MixerDims {
  std::size_t input = 0;   // F
  std::size_t hidden = 0;  // H, per direction
  std::size_t output = 0;  // V_union

  friend bool operator==(const MixerDims &, const MixerDims &) = default;
};

inline constexpr std::size_t kMixerLayers = 2;
inline constexpr std::size_t kDefaultMixerHidden = 128;

/// Parameters of the mixer network: two bidirectional LSTM layers and an
/// affine output layer, stored flat in this order:
///
///   for layer in 0, 1; for direction in forward, backward:
///     W  (4H x in)   input weights, in = F for layer 0 and 2H for layer 1
///     U  (4H x H)    recurrent weights
///     b  (4H)        bias
///   Wout (V x 2H), bout (V)
///
/// Matrices are row-major. Gate blocks within 4H are input, forget,
/// candidate, output. Layer inputs and the output layer input are the
/// forward-direction state followed by the backward-direction state.
class MixerParams {
 public:
  MixerParams() = default;
  // All zero.
  explicit MixerParams(MixerDims dims);
  // Uniform in [-1/sqrt(H), 1/sqrt(H)] from a seeded mt19937_64.
  static MixerParams Random(MixerDims dims, std::uint64_t seed);

  const MixerDims &dims() const { return dims_; }
  std::size_t size() const { return values_.size(); }
  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  struct LstmBlock {
    std::size_t input;  // columns of W
    std::size_t w, u, b;  // offsets into values()
  };
  LstmBlock Lstm(std::size_t layer, std::size_t direction) const;
  std::size_t out_w() const;
  std::size_t out_b() const;

  friend bool operator==(const MixerParams &, const MixerParams &) = default;

 private:
  MixerDims dims_;
  std::vector<double> values_;
};

std::size_t MixerParamCount(const MixerDims &dims);

/// T x V_union log-probabilities. Throws ShapeMismatch when the feature width
/// is not dims().input.
Matrix MixerForward(const MixerParams &params, const Matrix &features);

struct MixerLossResult {
  double loss = 0.0;         // CTC loss of the forward output
  std::vector<double> grad;  // d loss / d params, same layout as values()
};

/// CTC loss of MixerForward(params, features) against `target` (union ids)
/// and its gradient by backpropagation through time. An unalignable target
/// gives +infinity and an all-zero gradient.
MixerLossResult MixerBackward(const MixerParams &params, const Matrix &features,
                              std::span<const int> target);

// File layout (little-endian): "MIXR" | u16 version=1 | u32 F | u32 H |
// u32 V_union | parameters as f32 in the order documented on MixerParams.
inline constexpr std::string_view kMixerMagic = "MIXR";
inline constexpr std::uint16_t kMixerVersion = 1;

std::string WriteMixer(const MixerParams &params);
// Throws BadMagic, TruncatedFile (short or long payload) or InvalidConfig
// (unknown version, zero dimension).
MixerParams ReadMixer(std::string_view bytes);
void SaveMixer(const std::filesystem::path &path, const MixerParams &params);
MixerParams LoadMixer(const std::filesystem::path &path);

}  // namespace cstk

#endif  // CSTK_MIXER_MIXER_MODEL_H_
