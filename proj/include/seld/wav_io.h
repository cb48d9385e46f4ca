// Copyright 2026 The seldkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SELD_WAV_IO_H_
#define SELD_WAV_IO_H_

#include <filesystem>
#include <vector>

#include "seld/ambisonics.h"
#include "seld/renderers.h"

namespace seld {

enum class SampleFormat { kPcm16, kFloat32 };

struct AudioData {
  int sample_rate_hz = 0;
  SampleFormat format = SampleFormat::kFloat32;  // as read from disk
  std::vector<std::vector<double>> channels;

  int num_channels() const { return static_cast<int>(channels.size()); }
  size_t num_samples() const {
    return channels.empty() ? 0 : channels.front().size();
  }
};

inline constexpr int kMaxWavChannels = 4;

// RIFF/WAVE with PCM16 or IEEE float32 samples (plain or
// WAVE_FORMAT_EXTENSIBLE), 1 to 4 channels. PCM16 is scaled by 1/32768.
// Unknown chunks are skipped. Throws kDataError on malformed or unsupported
// files and kIoError when the file cannot be read.
AudioData ReadWav(const std::filesystem::path& path);

// PCM16 output is round(x * 32768) saturated to [-32768, 32767]. Float32
// output is lossless for values that came from a float32 file.
void WriteWav(const std::filesystem::path& path, const AudioData& audio,
              SampleFormat format = SampleFormat::kFloat32);

// Channel-count checked conversions. Throw kDataError on a mismatch.
FoaBuffer ToFoa(const AudioData& audio);
StereoBuffer ToStereo(const AudioData& audio);
AudioData FromFoa(const FoaBuffer& foa);
AudioData FromStereo(const StereoBuffer& stereo);

}  // namespace seld

#endif  // SELD_WAV_IO_H_
