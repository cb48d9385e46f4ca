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

#ifndef SELD_SCENE_SYNTH_H_
#define SELD_SCENE_SYNTH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seld/ambisonics.h"
#include "seld/annotation.h"

namespace seld {

enum class SignalKind { kNoiseBurst, kToneComplex, kChirp, kCustom };

// Parses "noise", "tones" or "chirp". Throws kInvalidArgument otherwise.
SignalKind ParseSignalKind(const std::string& name);
std::string SignalKindName(SignalKind kind);

// Azimuth at a time offset from the event onset.
struct AzimuthKeyframe {
  double time_s = 0.0;
  double azimuth_deg = 0.0;
};

struct EventSpec {
  int class_index = 0;
  double onset_s = 0.0;
  double duration_s = 1.0;
  Direction direction;
  // When non-empty the azimuth follows these keyframes (linear in the given
  // degrees, held constant outside them) and `direction.azimuth_deg` is
  // ignored.
  std::vector<AzimuthKeyframe> trajectory;
  SignalKind signal = SignalKind::kNoiseBurst;
  std::vector<double> custom_signal;  // used by kCustom, at the scene rate
  double gain_db = 0.0;
  uint64_t seed = 0;

  double AzimuthAt(double time_in_event_s) const;
};

struct ReverbConfig {
  double t60_s = 0.0;  // 0 disables the tail
  double direct_to_reverb_db = 10.0;
};

struct SceneSpec {
  double length_s = 5.0;
  int sample_rate_hz = 24000;
  std::vector<EventSpec> events;
  std::optional<double> noise_floor_db;
  ReverbConfig reverb;
  uint64_t rng_seed = 0;
};

inline constexpr int kMaxSimultaneousSources = 5;

// Generators produce -20 dBFS RMS with 5 ms raised-cosine fades.
std::vector<double> GenerateSignal(SignalKind kind, size_t num_samples,
                                   int sample_rate_hz, uint64_t seed);

// Sum of encoded point sources, optional seeded diffuse noise floor and
// optional diffuse reverb tails. A label frame is active for an event when the
// frame midpoint lies in [onset, onset + duration). Source indices are the
// lowest index not held by an overlapping event of the same class.
// Throws kInvalidArgument for events outside the scene, a class outside
// [0, 12], invalid directions or more than 5 simultaneous sources.
LabeledScene SynthesizeScene(const SceneSpec& spec);

// Fraction of active frames holding k simultaneous (class, source) records.
// Frames without any record are ignored, so the fractions sum to 1.
std::map<int, double> PolyphonyProfile(const AnnotationList& annotations);
std::map<int, double> PolyphonyProfile(
    std::span<const AnnotationList> scenes);

// Suite presets. Every scene's SceneSpec is fully determined by the seed.

struct SingleSourceSuiteOptions {
  int num_scenes = 200;
  double scene_length_s = 2.0;
  int sample_rate_hz = 24000;
  int class_index = 0;
  SignalKind signal = SignalKind::kNoiseBurst;
  // Azimuths are stratified over [-180, 180) and rounded to whole degrees.
  uint64_t seed = 1;
};
std::vector<SceneSpec> SingleSourceSuite(const SingleSourceSuiteOptions& opt);

struct PolyphonySuiteOptions {
  double total_length_s = 600.0;
  double scene_length_s = 60.0;
  int sample_rate_hz = 24000;
  // Target share of active frames with 1, 2, 3 and 4 sources.
  std::vector<double> profile = {0.56, 0.31, 0.10, 0.03};
  double silence_fraction = 0.1;
  int min_segment_frames = 10;
  int max_segment_frames = 30;
  int num_classes = 1;
  double min_separation_deg = 20.0;
  double gain_min_db = -3.0;
  double gain_max_db = 0.0;
  SignalKind signal = SignalKind::kNoiseBurst;
  uint64_t seed = 1;
};
std::vector<SceneSpec> PolyphonySuite(const PolyphonySuiteOptions& opt);

// Two independent event lanes, so polyphony never exceeds 2.
struct SynmixSuiteOptions {
  int num_scenes = 10;
  double scene_length_s = 60.0;
  int sample_rate_hz = 24000;
  int num_classes = kNumClasses;
  SignalKind signal = SignalKind::kNoiseBurst;
  uint64_t seed = 1;
};
std::vector<SceneSpec> SynmixSuite(const SynmixSuiteOptions& opt);

}  // namespace seld

#endif  // SELD_SCENE_SYNTH_H_
