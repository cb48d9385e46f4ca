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

#include "seld/resample.h"

#include <algorithm>
#include <cmath>

#include "seld/angles.h"
#include "seld/error.h"

namespace seld {

std::vector<double> Resample(std::span<const double> input, int from_hz,
                             int to_hz, const ResamplerConfig& cfg) {
  if (from_hz <= 0 || to_hz <= 0) ThrowInvalidArgument("rates must be > 0");
  if (cfg.half_width < 1 || !(cfg.rolloff > 0.0 && cfg.rolloff <= 1.0)) {
    ThrowInvalidArgument("invalid resampler configuration");
  }
  if (from_hz == to_hz) return {input.begin(), input.end()};

  const double ratio = static_cast<double>(to_hz) / from_hz;
  // Cutoff in cycles per input sample.
  const double cutoff = 0.5 * std::min(1.0, ratio) * cfg.rolloff;
  const double half = cfg.half_width / std::min(1.0, ratio);
  const double norm = std::cyl_bessel_i(0.0, cfg.kaiser_beta);
  const size_t out_len = static_cast<size_t>(
      std::llround(static_cast<double>(input.size()) * ratio));
  const long n_in = static_cast<long>(input.size());

  std::vector<double> out(out_len, 0.0);
  for (size_t k = 0; k < out_len; ++k) {
    const double t = static_cast<double>(k) * from_hz / to_hz;
    const long lo = std::max(0L, static_cast<long>(std::ceil(t - half)));
    const long hi = std::min(n_in - 1, static_cast<long>(std::floor(t + half)));
    double acc = 0.0;
    for (long n = lo; n <= hi; ++n) {
      const double x = n - t;
      const double u = x / half;
      const double w =
          std::cyl_bessel_i(0.0, cfg.kaiser_beta * std::sqrt(std::max(0.0, 1.0 - u * u))) /
          norm;
      const double arg = 2.0 * cutoff * x;
      const double sinc = arg == 0.0 ? 1.0 : std::sin(kPi * arg) / (kPi * arg);
      acc += input[n] * 2.0 * cutoff * sinc * w;
    }
    out[k] = acc;
  }
  return out;
}

AudioData ResampleAudio(const AudioData& audio, int to_hz,
                        const ResamplerConfig& cfg) {
  if (audio.sample_rate_hz == to_hz) return audio;
  AudioData out;
  out.sample_rate_hz = to_hz;
  out.format = audio.format;
  for (const auto& ch : audio.channels) {
    out.channels.push_back(Resample(ch, audio.sample_rate_hz, to_hz, cfg));
  }
  return out;
}

}  // namespace seld
