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

#include "seld/ambisonics.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "seld/angles.h"
#include "seld/error.h"

namespace seld {

void Direction::Validate() const {
  if (!(azimuth_deg >= -180.0 && azimuth_deg <= 180.0)) {
    ThrowInvalidArgument("azimuth out of range: " +
                         std::to_string(azimuth_deg));
  }
  if (!(elevation_deg >= -90.0 && elevation_deg <= 90.0)) {
    ThrowInvalidArgument("elevation out of range: " +
                         std::to_string(elevation_deg));
  }
}

void SortAnnotations(AnnotationList& annotations) {
  std::stable_sort(annotations.begin(), annotations.end(),
                   [](const EventAnnotation& a, const EventAnnotation& b) {
                     return std::tie(a.frame_index, a.class_index,
                                     a.source_index) <
                            std::tie(b.frame_index, b.class_index,
                                     b.source_index);
                   });
}

int LabelFrameCount(double seconds) {
  if (seconds <= 0.0) return 0;
  // Guard against 0.1 not being representable: 5.0 s is 50 frames, not 51.
  return static_cast<int>(std::ceil(seconds / kLabelFrameSeconds - 1e-9));
}

FoaBuffer::FoaBuffer(size_t num_samples, int sample_rate_hz)
    : sample_rate_hz_(sample_rate_hz) {
  if (sample_rate_hz <= 0) ThrowInvalidArgument("sample rate must be > 0");
  for (auto& ch : channels_) ch.assign(num_samples, 0.0);
}

FoaBuffer::FoaBuffer(std::array<std::vector<double>, kNumFoaChannels> channels,
                     int sample_rate_hz)
    : channels_(std::move(channels)), sample_rate_hz_(sample_rate_hz) {
  if (sample_rate_hz <= 0) ThrowInvalidArgument("sample rate must be > 0");
  for (const auto& ch : channels_) {
    if (ch.size() != channels_[0].size()) {
      ThrowInvalidArgument("FOA channels must have identical length");
    }
  }
}

double FoaBuffer::duration_seconds() const {
  if (sample_rate_hz_ <= 0) return 0.0;
  return static_cast<double>(num_samples()) / sample_rate_hz_;
}

void FoaBuffer::Add(const FoaBuffer& other) {
  if (other.num_samples() != num_samples() ||
      other.sample_rate_hz_ != sample_rate_hz_) {
    ThrowInvalidArgument("cannot add FOA buffers of different shape");
  }
  for (int c = 0; c < kNumFoaChannels; ++c) {
    auto& dst = channels_[c];
    const auto& src = other.channels_[c];
    for (size_t n = 0; n < dst.size(); ++n) dst[n] += src[n];
  }
}

FoaBuffer EncodePointSource(std::span<const double> mono, const Direction& dir,
                            int sample_rate_hz) {
  if (mono.empty()) ThrowInvalidArgument("cannot encode an empty signal");
  dir.Validate();
  const double cos_el = CosDeg(dir.elevation_deg);
  const std::array<double, kNumFoaChannels> gains = {
      1.0, SinDeg(dir.azimuth_deg) * cos_el, SinDeg(dir.elevation_deg),
      CosDeg(dir.azimuth_deg) * cos_el};
  std::array<std::vector<double>, kNumFoaChannels> channels;
  for (int c = 0; c < kNumFoaChannels; ++c) {
    channels[c].resize(mono.size());
    for (size_t n = 0; n < mono.size(); ++n) channels[c][n] = gains[c] * mono[n];
  }
  return FoaBuffer(std::move(channels), sample_rate_hz);
}

FoaBuffer AcsRotate(const FoaBuffer& foa, RotationStep step) {
  const auto& in = foa.channels();
  std::array<std::vector<double>, kNumFoaChannels> out = in;
  auto negated = [](const std::vector<double>& v) {
    std::vector<double> r(v.size());
    std::transform(v.begin(), v.end(), r.begin(), [](double s) { return -s; });
    return r;
  };
  switch (step) {
    case RotationStep::kIdentity:
      break;
    case RotationStep::kR90:
      out[kX] = negated(in[kY]);
      out[kY] = in[kX];
      break;
    case RotationStep::kR180:
      out[kX] = negated(in[kX]);
      out[kY] = negated(in[kY]);
      break;
    case RotationStep::kR270:
      out[kX] = in[kY];
      out[kY] = negated(in[kX]);
      break;
  }
  return FoaBuffer(std::move(out), foa.sample_rate_hz());
}

AnnotationList AcsRotateLabels(const AnnotationList& labels,
                               RotationStep step) {
  AnnotationList out = labels;
  const double shift = RotationDegrees(step);
  for (auto& a : out) a.azimuth_deg = WrapAzimuth(a.azimuth_deg + shift);
  return out;
}

std::vector<LabeledScene> ExpandAcs(const LabeledScene& scene) {
  std::vector<LabeledScene> out;
  out.reserve(kAcsSteps.size());
  for (RotationStep step : kAcsSteps) {
    if (step == RotationStep::kIdentity) {
      out.push_back(scene);
    } else {
      out.push_back({AcsRotate(scene.audio, step),
                     AcsRotateLabels(scene.labels, step)});
    }
  }
  return out;
}

}  // namespace seld
