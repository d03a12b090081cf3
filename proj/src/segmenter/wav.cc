// src/segmenter/wav.cc

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

#include "cstk/segmenter/wav.h"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "cstk/base/bytes.h"
#include "cstk/base/error.h"
#include "cstk/base/file-util.h"

namespace cstk {

Audio ReadWav(std::string_view bytes) {
  try {
    ByteReader r(bytes);
    if (r.Bytes(4) != "RIFF") throw Error(ErrorKind::kBadAudio, "missing RIFF header");
    r.U32();
    if (r.Bytes(4) != "WAVE") throw Error(ErrorKind::kBadAudio, "not a WAVE file");
    int channels = 0;
    int bits = 0;
    Audio audio;
    bool have_fmt = false;
    while (r.remaining() >= 8) {
      const std::string_view id = r.Bytes(4);
      const std::uint32_t size = r.U32();
      if (id == "fmt ") {
        ByteReader f(r.Bytes(size));
        const std::uint16_t format = f.U16();
        channels = f.U16();
        audio.sample_rate_hz = static_cast<int>(f.U32());
        f.U32();
        f.U16();
        bits = f.U16();
        if (format != 1 || bits != 16)
          throw Error(ErrorKind::kBadAudio, "only 16-bit PCM is supported");
        if (channels < 1 || audio.sample_rate_hz <= 0)
          throw Error(ErrorKind::kBadAudio, "bad channel count or sample rate");
        have_fmt = true;
      } else if (id == "data") {
        if (!have_fmt) throw Error(ErrorKind::kBadAudio, "data chunk before fmt chunk");
        const std::size_t avail = std::min<std::size_t>(size, r.remaining());
        ByteReader d(r.Bytes(avail));
        const std::size_t frames = avail / (2 * static_cast<std::size_t>(channels));
        audio.samples.resize(frames);
        for (std::size_t i = 0; i < frames; ++i) {
          double sum = 0.0;
          for (int c = 0; c < channels; ++c)
            sum += static_cast<std::int16_t>(d.U16()) / 32768.0;
          audio.samples[i] = static_cast<float>(sum / channels);
        }
        return audio;
      } else {
        r.Bytes(std::min<std::size_t>(size + (size & 1), r.remaining()));
      }
    }
    throw Error(ErrorKind::kBadAudio, "no data chunk");
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::kTruncatedFile) throw Error(ErrorKind::kBadAudio, e.what());
    throw;
  }
}

Audio LoadWav(const std::filesystem::path &path) { return ReadWav(ReadFile(path)); }

std::string WriteWav(const Audio &audio) {
  const auto data_bytes = static_cast<std::uint32_t>(audio.samples.size() * 2);
  ByteWriter w;
  w.Bytes("RIFF");
  w.U32(36 + data_bytes);
  w.Bytes("WAVE");
  w.Bytes("fmt ");
  w.U32(16);
  w.U16(1);
  w.U16(1);
  w.U32(static_cast<std::uint32_t>(audio.sample_rate_hz));
  w.U32(static_cast<std::uint32_t>(audio.sample_rate_hz) * 2);
  w.U16(2);
  w.U16(16);
  w.Bytes("data");
  w.U32(data_bytes);
  for (float s : audio.samples) {
    const long v = std::clamp(std::lround(static_cast<double>(s) * 32768.0), -32768L, 32767L);
    w.U16(static_cast<std::uint16_t>(static_cast<std::int16_t>(v)));
  }
  return w.release();
}

void SaveWav(const std::filesystem::path &path, const Audio &audio) {
  WriteFile(path, WriteWav(audio));
}

}  // namespace cstk
