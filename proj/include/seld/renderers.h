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

#ifndef SELD_RENDERERS_H_
#define SELD_RENDERERS_H_

#include <complex>
#include <vector>

#include "seld/ambisonics.h"

namespace seld {

struct StereoBuffer {
  std::vector<double> left;
  std::vector<double> right;
  int sample_rate_hz = 0;

  size_t num_samples() const { return left.size(); }
  friend bool operator==(const StereoBuffer&, const StereoBuffer&) = default;
};

// left = W + Y, right = W - Y. No gain compensation is applied, so a source
// at +90 degrees peaks at twice its mono amplitude.
StereoBuffer FoaToStereo(const FoaBuffer& foa);

enum class BinauralMethod {
  // Per time-frequency bin, the intensity direction steers a spherical-head
  // ear response; the diffuse remainder goes through the virtual ring.
  kParametric,
  // Everything is decoded to the virtual loudspeaker ring and each speaker is
  // rendered with its own spherical-head response.
  kVirtualRing,
};

struct BinauralRendererConfig {
  double head_radius_m = 0.0875;
  double speed_of_sound_mps = 343.0;
  std::vector<double> virtual_speaker_azimuths_deg = {0.0,    45.0,  90.0,
                                                      135.0,  -180.0, -135.0,
                                                      -90.0,  -45.0};
  // Head shadow (Brown-Duda one-pole one-zero shelf, magnitude only): the
  // high-frequency gain alpha goes from 2 at the ear axis down to
  // shadow_min_alpha at shadow_min_angle_deg from it.
  double shadow_min_alpha = 0.1;
  double shadow_min_angle_deg = 150.0;
  // Rear pinna shelf applied to both ears; reaches pinna_rear_gain_db above
  // pinna_shelf_hz for a source directly behind, 0 dB in front.
  double pinna_rear_gain_db = -8.0;
  double pinna_shelf_hz = 3000.0;
  BinauralMethod method = BinauralMethod::kParametric;
  // Analysis frame of the renderer's STFT (FFT is twice as long).
  int frame_samples = 512;
  // Recursive smoothing factor for the intensity/energy estimates that drive
  // diffuseness, in [0, 1).
  double diffuseness_smoothing = 0.5;

  // Throws kInvalidArgument on a non-positive radius or speed of sound, fewer
  // than 4 or duplicate speakers, or out-of-range filter parameters.
  void Validate() const;

  friend bool operator==(const BinauralRendererConfig&,
                         const BinauralRendererConfig&) = default;
};

// Woodworth interaural time difference for a horizontal-plane source,
// (r / c) * (lat + sin(lat)) with lat the lateral angle asin(sin az).
// Positive when the left ear leads.
double WoodworthItdSeconds(double azimuth_deg, double head_radius_m,
                           double speed_of_sound_mps);

// Inverse of the Woodworth law: lateral angle in [-90, 90] degrees. ITDs
// beyond the model's maximum saturate at +-90.
double InvertWoodworthDegrees(double itd_seconds, double head_radius_m,
                              double speed_of_sound_mps);

// Head-shadow magnitude for an ear, given the angle between the source and
// that ear's axis.
double HeadShadowMagnitude(double freq_hz, double incidence_deg,
                           const BinauralRendererConfig& cfg);

// Rear pinna shelf magnitude, identical for both ears.
double PinnaMagnitude(double freq_hz, double azimuth_deg,
                      const BinauralRendererConfig& cfg);

struct EarPair {
  std::complex<double> left;
  std::complex<double> right;
};

// Complete spherical-head response for a horizontal direction: ITD split
// symmetrically (left advanced by ITD / 2, right delayed by ITD / 2), head
// shadow per ear and the shared pinna shelf.
EarPair SphericalHeadResponse(double freq_hz, double azimuth_deg,
                              const BinauralRendererConfig& cfg);

StereoBuffer FoaToBinaural(const FoaBuffer& foa,
                           const BinauralRendererConfig& cfg);

}  // namespace seld

#endif  // SELD_RENDERERS_H_
