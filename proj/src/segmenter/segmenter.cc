// src/segmenter/segmenter.cc

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

#include "cstk/segmenter/segmenter.h"

#include <algorithm>
#include <cmath>

#include "cstk/base/error.h"

namespace cstk {

void ValidateSegmenterConfig(const SegmenterConfig &config) {
  if (config.frame_ms <= 0 || config.min_silence_ms <= 0 || config.min_chunk_s <= 0 ||
      config.max_chunk_s <= 0 || config.hangover_frames < 0) {
    throw Error(ErrorKind::kInvalidConfig, "segmenter durations must be positive");
  }
  if (!(config.min_chunk_s < config.max_chunk_s))
    throw Error(ErrorKind::kInvalidConfig, "min_chunk_s must be below max_chunk_s");
}

namespace {

std::size_t FrameLength(int sample_rate_hz, int frame_ms) {
  return static_cast<std::size_t>(static_cast<long long>(sample_rate_hz) * frame_ms / 1000);
}

// Half-open frame range.
struct Span {
  std::size_t begin;
  std::size_t end;
  std::size_t size() const { return end - begin; }
};

void SplitLong(const Span &span, const std::vector<double> &energy, std::size_t min_frames,
               std::size_t max_frames, std::vector<Span> *out) {
  if (span.size() <= max_frames) {
    out->push_back(span);
    return;
  }
  std::size_t lo = span.begin + min_frames;
  std::size_t hi = span.end - min_frames;  // split frame k gives [begin,k) and [k,end)
  if (lo > hi) {
    // No split keeps both halves above the minimum; halve and let the caller
    // drop what is too short.
    lo = hi = span.begin + span.size() / 2;
  }
  std::size_t best = lo;
  for (std::size_t k = lo; k <= hi; ++k)
    if (energy[k] < energy[best]) best = k;
  SplitLong({span.begin, best}, energy, min_frames, max_frames, out);
  SplitLong({best, span.end}, energy, min_frames, max_frames, out);
}

}  // namespace

std::vector<double> FrameEnergies(std::span<const float> samples, int sample_rate_hz,
                                  int frame_ms) {
  if (sample_rate_hz <= 0 || frame_ms <= 0)
    throw Error(ErrorKind::kInvalidConfig, "sample rate and frame length must be positive");
  const std::size_t frame_len = FrameLength(sample_rate_hz, frame_ms);
  if (frame_len == 0 || samples.size() < frame_len)
    throw Error(ErrorKind::kEmptyAudio, "no complete frame in the input");
  const std::size_t num_frames = samples.size() / frame_len;
  std::vector<double> energies(num_frames);
  for (std::size_t f = 0; f < num_frames; ++f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < frame_len; ++i) {
      const double s = samples[f * frame_len + i];
      sum += s * s;
    }
    const double rms = std::sqrt(sum / static_cast<double>(frame_len));
    energies[f] = rms > 0.0 ? std::max(kEnergyFloorDb, 20.0 * std::log10(rms)) : kEnergyFloorDb;
  }
  return energies;
}

std::vector<Chunk> Segment(std::span<const float> samples, int sample_rate_hz,
                           const SegmenterConfig &config) {
  ValidateSegmenterConfig(config);
  const std::vector<double> energy = FrameEnergies(samples, sample_rate_hz, config.frame_ms);
  const std::size_t n = energy.size();
  const double peak = *std::max_element(energy.begin(), energy.end());
  if (peak <= kEnergyFloorDb) return {};
  const double threshold = peak + config.energy_threshold_db;

  std::vector<bool> speech(n);
  for (std::size_t i = 0; i < n; ++i) speech[i] = energy[i] > threshold;

  // Hangover: bridge short dips between speech frames.
  const auto hangover = static_cast<std::size_t>(config.hangover_frames);
  for (std::size_t i = 0; i < n;) {
    if (speech[i]) { ++i; continue; }
    std::size_t j = i;
    while (j < n && !speech[j]) ++j;
    if (i > 0 && j < n && j - i <= hangover) std::fill(speech.begin() + i, speech.begin() + j, true);
    i = j;
  }

  std::vector<Span> regions;
  for (std::size_t i = 0; i < n;) {
    if (!speech[i]) { ++i; continue; }
    std::size_t j = i;
    while (j < n && speech[j]) ++j;
    regions.push_back({i, j});
    i = j;
  }

  const std::size_t frame_len = FrameLength(sample_rate_hz, config.frame_ms);
  const double frame_s = static_cast<double>(frame_len) / sample_rate_hz;
  const auto frames_for = [&](double seconds) {
    return static_cast<std::size_t>(std::ceil(seconds / frame_s - 1e-9));
  };
  const std::size_t min_silence = frames_for(config.min_silence_ms / 1000.0);
  const std::size_t min_frames = frames_for(config.min_chunk_s);
  const auto max_frames =
      static_cast<std::size_t>(std::floor(config.max_chunk_s / frame_s + 1e-9));

  // Cut only at long silences.
  std::vector<Span> chunks;
  for (const Span &r : regions) {
    if (!chunks.empty() && r.begin - chunks.back().end < min_silence) {
      chunks.back().end = r.end;
    } else {
      chunks.push_back(r);
    }
  }

  // Fold short chunks into the nearer neighbour while the result fits.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      if (chunks[i].size() >= min_frames) continue;
      const bool has_left = i > 0;
      const bool has_right = i + 1 < chunks.size();
      const std::size_t gap_left = has_left ? chunks[i].begin - chunks[i - 1].end : 0;
      const std::size_t gap_right = has_right ? chunks[i + 1].begin - chunks[i].end : 0;
      const bool left_fits = has_left && chunks[i].end - chunks[i - 1].begin <= max_frames;
      const bool right_fits = has_right && chunks[i + 1].end - chunks[i].begin <= max_frames;
      bool merge_left = false;
      if (left_fits && right_fits) merge_left = gap_left <= gap_right;
      else if (left_fits) merge_left = true;
      if (merge_left) {
        chunks[i - 1].end = chunks[i].end;
      } else if (right_fits) {
        chunks[i + 1].begin = chunks[i].begin;
      }
      chunks.erase(chunks.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }

  std::vector<Span> sized;
  for (const Span &c : chunks) SplitLong(c, energy, min_frames, max_frames, &sized);

  const double duration = static_cast<double>(samples.size()) / sample_rate_hz;
  std::vector<Chunk> out;
  for (const Span &c : sized) {
    if (c.size() < min_frames) continue;
    Chunk chunk{c.begin * frame_s, c.end * frame_s};
    // A chunk running into the discarded partial frame extends to the end.
    if (c.end == n && duration - chunk.start_s <= config.max_chunk_s) chunk.end_s = duration;
    out.push_back(chunk);
  }
  return out;
}

}  // namespace cstk
