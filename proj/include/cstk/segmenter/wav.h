// include/cstk/segmenter/wav.h

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

#ifndef CSTK_SEGMENTER_WAV_H_
#define CSTK_SEGMENTER_WAV_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace cstk {

struct Audio {
  int sample_rate_hz = 16000;
  std::vector<float> samples;  // mono, full scale = 1.0

  double duration_s() const {
    return sample_rate_hz > 0 ? static_cast<double>(samples.size()) / sample_rate_hz : 0.0;
  }
};

// 16-bit PCM RIFF/WAVE only. Multi-channel input is mixed down by averaging.
// Throws BadAudio on anything else.
Audio ReadWav(std::string_view bytes);
Audio LoadWav(const std::filesystem::path &path);

// Writes 16-bit mono PCM; samples are clipped to [-1, 1].
std::string WriteWav(const Audio &audio);
void SaveWav(const std::filesystem::path &path, const Audio &audio);

}  // namespace cstk

#endif  // CSTK_SEGMENTER_WAV_H_
