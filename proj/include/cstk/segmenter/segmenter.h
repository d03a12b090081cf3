// include/cstk/segmenter/segmenter.h

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

#ifndef CSTK_SEGMENTER_SEGMENTER_H_
#define CSTK_SEGMENTER_SEGMENTER_H_

#include <span>
#include <vector>

namespace cstk {

struct SegmenterConfig {
  int frame_ms = 30;
  double energy_threshold_db = -35.0;  // relative to the loudest frame
  int min_silence_ms = 300;
  double min_chunk_s = 1.0;
  double max_chunk_s = 20.0;
  // Silence runs of at most this many frames between speech frames count as
  // speech.
  int hangover_frames = 3;
};

// Throws InvalidConfig.
void ValidateSegmenterConfig(const SegmenterConfig &config);

struct Chunk {
  double start_s = 0.0;
  double end_s = 0.0;

  friend bool operator==(const Chunk &, const Chunk &) = default;
};

inline constexpr double kEnergyFloorDb = -120.0;

/// RMS level in dB (full scale = 0 dB) of each complete frame; a trailing
/// partial frame is discarded and silent frames are floored at -120 dB.
/// Throws EmptyAudio when there is not a single complete frame.
std::vector<double> FrameEnergies(std::span<const float> samples, int sample_rate_hz,
                                  int frame_ms);

/// Energy-based voice activity segmentation. Frames louder than the peak
/// frame plus energy_threshold_db are speech; chunks are cut only at silences
/// of at least min_silence_ms. Chunks below min_chunk_s are merged into the
/// nearer neighbour when the result fits max_chunk_s, otherwise dropped;
/// chunks above max_chunk_s are split at their quietest frame.
std::vector<Chunk> Segment(std::span<const float> samples, int sample_rate_hz,
                           const SegmenterConfig &config = {});

}  // namespace cstk

#endif  // CSTK_SEGMENTER_SEGMENTER_H_
