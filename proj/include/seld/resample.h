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

#ifndef SELD_RESAMPLE_H_
#define SELD_RESAMPLE_H_

#include <span>
#include <vector>

#include "seld/wav_io.h"

namespace seld {

struct ResamplerConfig {
  // Half-length of the sinc kernel in zero crossings of the lower rate.
  int half_width = 32;
  double kaiser_beta = 8.6;
  // Cutoff as a fraction of the lower Nyquist frequency.
  double rolloff = 0.95;
};

// Band-limited interpolation with a Kaiser-windowed sinc kernel. The output
// has round(n * to / from) samples and sample k sits at input time
// k * from / to. Throws kInvalidArgument for non-positive rates.
std::vector<double> Resample(std::span<const double> input, int from_hz,
                             int to_hz, const ResamplerConfig& cfg = {});

// Resamples every channel; audio already at `to_hz` is returned unchanged.
AudioData ResampleAudio(const AudioData& audio, int to_hz,
                        const ResamplerConfig& cfg = {});

}  // namespace seld

#endif  // SELD_RESAMPLE_H_
