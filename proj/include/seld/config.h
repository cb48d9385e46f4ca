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

#ifndef SELD_CONFIG_H_
#define SELD_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "seld/doa_estimators.h"
#include "seld/renderers.h"
#include "seld/scene_synth.h"

namespace seld {

enum class Representation { kFoa, kBinaural, kStereo };

// "foa", "binaural" or "stereo".
Representation ParseRepresentation(const std::string& name);
std::string RepresentationName(Representation r);
int ChannelCount(Representation r);

enum class SuiteKind { kSingleSource, kPolyphony, kSynmix };
SuiteKind ParseSuiteKind(const std::string& name);
std::string SuiteKindName(SuiteKind kind);

struct SynthesisConfig {
  SuiteKind suite = SuiteKind::kSingleSource;
  // Single-source and synmix suites.
  int num_scenes = 200;
  double scene_length_s = 2.0;
  // Polyphony suite: total duration split into scene_length_s pieces.
  double total_length_s = 600.0;
  int num_classes = 1;
  int class_index = 0;
  SignalKind signal = SignalKind::kNoiseBurst;
  std::optional<double> noise_floor_db;
  double t60_s = 0.0;
  double direct_to_reverb_db = 10.0;

  friend bool operator==(const SynthesisConfig&, const SynthesisConfig&) = default;
};

struct EstimatorConfig {
  double foa_threshold = kFoaConfidenceThreshold;
  double gcc_threshold = kGccConfidenceThreshold;
  AmbiguityPolicy stereo_policy = AmbiguityPolicy::kFront;
  AmbiguityPolicy binaural_policy = AmbiguityPolicy::kSpectralCue;
  int max_lag = 32;
  // Unset: the spacing that maps max_lag onto +-90 degrees.
  std::optional<double> stereo_separation_m;
  bool subsample_peak = true;
  int class_hint = 0;

  friend bool operator==(const EstimatorConfig&, const EstimatorConfig&) = default;
};

struct MetricsConfig {
  double tolerance_deg = 20.0;
  double accdoa_threshold = 0.5;
  int accdoa_tracks = 3;

  friend bool operator==(const MetricsConfig&, const MetricsConfig&) = default;
};

struct PipelineConfig {
  std::vector<Representation> representations = {
      Representation::kFoa, Representation::kBinaural, Representation::kStereo};
  bool horizontal_only = true;
  bool acs_enabled = false;
  bool keep_audio = false;
  uint64_t seed = 1;
  SynthesisConfig synthesis;
  BinauralRendererConfig renderer;
  EstimatorConfig estimator;
  MetricsConfig metrics;

  // Throws kInvalidArgument for inconsistent values.
  void Validate() const;

  friend bool operator==(const PipelineConfig&,
                         const PipelineConfig&) = default;
};

// INI text with sections [pipeline], [synthesis], [renderer], [estimator] and
// [metrics]. Keys missing from the text keep the values already in `base`.
// Unknown sections or keys are rejected with kInvalidArgument.
PipelineConfig ParseConfig(const std::string& text,
                           const PipelineConfig& base = {});
PipelineConfig LoadConfig(const std::filesystem::path& path,
                          const PipelineConfig& base = {});
// Every key with its current value; ParseConfig(DumpConfig(c)) == c.
std::string DumpConfig(const PipelineConfig& cfg);

// Geometry the two-channel estimator uses for a representation.
TwoChannelGeometry GeometryFor(Representation r, const PipelineConfig& cfg);
EventConversionConfig ConversionFor(Representation r, const PipelineConfig& cfg,
                                    uint64_t seed);

}  // namespace seld

#endif  // SELD_CONFIG_H_
