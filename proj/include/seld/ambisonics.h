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

#ifndef SELD_AMBISONICS_H_
#define SELD_AMBISONICS_H_

#include <array>
#include <span>
#include <vector>

#include "seld/annotation.h"

namespace seld {

// First-order Ambisonics in ambiX convention: ACN channel order with SN3D
// normalization. A plane wave s arriving from (azimuth, elevation) encodes as
//
//   W = s
//   Y = s * sin(azimuth) * cos(elevation)
//   Z = s * sin(elevation)
//   X = s * cos(azimuth) * cos(elevation)
//
// so W and the first-order components share unit gain on axis.
enum FoaChannel : int { kW = 0, kY = 1, kZ = 2, kX = 3 };

inline constexpr int kNumFoaChannels = 4;

class FoaBuffer {
 public:
  FoaBuffer() = default;
  // Zero-filled buffer. Throws kInvalidArgument for a non-positive rate.
  FoaBuffer(size_t num_samples, int sample_rate_hz);
  // Takes ownership of four equally long channels in ACN order.
  FoaBuffer(std::array<std::vector<double>, kNumFoaChannels> channels,
            int sample_rate_hz);

  int sample_rate_hz() const { return sample_rate_hz_; }
  size_t num_samples() const { return channels_[0].size(); }
  double duration_seconds() const;

  std::span<const double> channel(int acn) const { return channels_[acn]; }
  std::span<double> mutable_channel(int acn) { return channels_[acn]; }
  const std::array<std::vector<double>, kNumFoaChannels>& channels() const {
    return channels_;
  }

  // Sample-wise accumulation of another buffer with identical shape.
  void Add(const FoaBuffer& other);

  friend bool operator==(const FoaBuffer&, const FoaBuffer&) = default;

 private:
  std::array<std::vector<double>, kNumFoaChannels> channels_;
  int sample_rate_hz_ = 0;
};

// Counterclockwise azimuthal scene rotations used for channel-swap
// augmentation.
enum class RotationStep { kIdentity = 0, kR90 = 90, kR180 = 180, kR270 = 270 };

inline double RotationDegrees(RotationStep step) {
  return static_cast<double>(static_cast<int>(step));
}

// Encodes a mono signal as a static plane wave.
// Throws kInvalidArgument for an empty signal or an invalid direction.
FoaBuffer EncodePointSource(std::span<const double> mono, const Direction& dir,
                            int sample_rate_hz);

// Rotates the sound field by swapping and negating X and Y:
//   R90:  (X', Y') = (-Y,  X)
//   R180: (X', Y') = (-X, -Y)
//   R270: (X', Y') = ( Y, -X)
// W and Z are copied untouched; the result is bit-exact.
FoaBuffer AcsRotate(const FoaBuffer& foa, RotationStep step);

// Shifts every azimuth by the rotation angle and wraps to [-180, 180).
AnnotationList AcsRotateLabels(const AnnotationList& labels,
                               RotationStep step);

struct LabeledScene {
  FoaBuffer audio;
  AnnotationList labels;
};

// Returns {identity, R90, R180, R270} versions of the scene, in that order.
std::vector<LabeledScene> ExpandAcs(const LabeledScene& scene);

inline constexpr std::array<RotationStep, 4> kAcsSteps = {
    RotationStep::kIdentity, RotationStep::kR90, RotationStep::kR180,
    RotationStep::kR270};

}  // namespace seld

#endif  // SELD_AMBISONICS_H_
