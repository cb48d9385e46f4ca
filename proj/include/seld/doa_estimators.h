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

#ifndef SELD_DOA_ESTIMATORS_H_
#define SELD_DOA_ESTIMATORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seld/annotation.h"
#include "seld/dsp_features.h"
#include "seld/renderers.h"

namespace seld {

struct DoaEstimate {
  int frame_index = 0;
  double azimuth_deg = 0.0;
  double confidence = 0.0;
  // Mirror hypothesis wrap(180 - azimuth) for estimators that cannot tell
  // front from back.
  std::optional<double> alternate_azimuth_deg;
  // Spectral evidence (dB) that the alternate, rear hypothesis is the true
  // one; positive favours the alternate. Zero when unavailable.
  double rear_evidence_db = 0.0;
};

// Per frame: azimuth of the band-energy weighted mean intensity vector.
// Confidence is the mean vector's horizontal length relative to that of a
// single plane wave, clamped to [0, 1]. `band_power` holds linear mel power of
// W with the same frames and bands; pass an empty tensor for uniform weights.
std::vector<DoaEstimate> DoaFoaIntensity(const FeatureTensor& intensity,
                                         const FeatureTensor& band_power);

enum class TwoChannelMode { kStereo, kBinaural };

struct TwoChannelGeometry {
  // Stereo: microphone spacing used when a non-zero lag is found. Binaural:
  // ear-to-ear distance, i.e. twice the head radius.
  double separation_m = 0.175;
  double speed_of_sound_mps = 343.0;
  TwoChannelMode mode = TwoChannelMode::kBinaural;
  int sample_rate_hz = 24000;
  // Parabolic refinement of the GCC peak.
  bool subsample_peak = true;
  // Shadow/pinna parameters for the binaural spectral cue. Radius and speed
  // of sound are taken from the fields above.
  BinauralRendererConfig head_model;

  // Throws kInvalidArgument for non-positive separation, speed or rate.
  void Validate() const;
};

// Separation that maps `max_lag` samples onto +-90 degrees.
double StereoSeparationForLag(int max_lag, int sample_rate_hz,
                              double speed_of_sound_mps);

// Everything the two-channel estimator looks at, one row per frame.
struct TwoChannelCues {
  FeatureTensor gcc;                // frames x (2 max_lag + 1) x 1
  std::vector<double> energy_left;  // sum of |L|^2 over bins
  std::vector<double> energy_right;
  std::vector<double> low_band_energy;   // |L|^2 + |R|^2 in the low band
  std::vector<double> high_band_energy;  // |L|^2 + |R|^2 in the high band
  int max_lag = 32;

  int frames() const { return gcc.frames; }
};

struct SpectralCueBands {
  double low_min_hz = 300.0;
  double low_max_hz = 1500.0;
  double high_min_hz = 4000.0;
  double high_max_hz = 10000.0;
};

TwoChannelCues ComputeTwoChannelCues(const Spectrogram& left,
                                     const Spectrogram& right,
                                     const StftConfig& stft, int max_lag = 32,
                                     const SpectralCueBands& bands = {});

// Averages cue rows in groups of `factor` (see PoolFrames).
TwoChannelCues PoolCues(const TwoChannelCues& cues,
                        int factor = kLabelPoolFactor);

// Per frame: tau = argmax lag / fs (positive = left leads). Stereo mode maps
// tau through arcsin(c tau / d); when the peak sits at lag 0 (coincident
// downmix) it falls back to arcsin((|L| - |R|) / (|L| + |R|)) on frame RMS.
// Binaural mode inverts the Woodworth law and scores the rear hypothesis
// against the head model's spectral tilt, assuming a spectrally flat source.
// The primary azimuth always lies in the front half-plane; confidence is the
// GCC peak value.
std::vector<DoaEstimate> DoaTwoChannelTdoa(const TwoChannelCues& cues,
                                           const TwoChannelGeometry& geometry,
                                           const StftConfig& stft = {},
                                           const SpectralCueBands& bands = {});

enum class AmbiguityPolicy {
  kFront,       // keep the front-half-plane hypothesis
  kAlternate,   // always take the mirrored hypothesis
  kRandom,      // seeded coin flip per frame
  kSpectralCue, // alternate when rear_evidence_db > 0
};

AmbiguityPolicy ParseAmbiguityPolicy(const std::string& name);
std::string AmbiguityPolicyName(AmbiguityPolicy policy);

struct EventConversionConfig {
  double confidence_threshold = 0.1;
  AmbiguityPolicy policy = AmbiguityPolicy::kFront;
  uint64_t seed = 0;
};

inline constexpr double kFoaConfidenceThreshold = 0.1;
inline constexpr double kGccConfidenceThreshold = 0.3;

// Frames with confidence >= threshold become one record each with the given
// class and source index 0.
AnnotationList EstimatesToEvents(const std::vector<DoaEstimate>& estimates,
                                 int class_hint,
                                 const EventConversionConfig& cfg);

// Feature extraction + estimation on the 100 ms label grid.
std::vector<DoaEstimate> EstimateFromFoa(const FoaBuffer& foa,
                                         const StftConfig& stft = {});
std::vector<DoaEstimate> EstimateFromTwoChannel(
    const StereoBuffer& audio, const TwoChannelGeometry& geometry,
    const StftConfig& stft = {}, int max_lag = 32);

}  // namespace seld

#endif  // SELD_DOA_ESTIMATORS_H_
