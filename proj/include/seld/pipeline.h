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

#ifndef SELD_PIPELINE_H_
#define SELD_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "seld/analysis_report.h"
#include "seld/config.h"
#include "seld/seld_metrics.h"
#include "seld/wav_io.h"

namespace seld {

// Scene specs of the configured suite, seeded from cfg.seed.
std::vector<SceneSpec> SuiteSpecs(const PipelineConfig& cfg);

// FOA is passed through; binaural and stereo are rendered from it.
AudioData RenderRepresentation(const FoaBuffer& foa, Representation r,
                               const PipelineConfig& cfg);

// Estimates on the label grid, then confidence gating, ambiguity resolution,
// a pass through the ACCDOA output format and rounding to stored precision.
// Frames at or beyond `num_frames` are dropped. Throws kDataError when the
// channel count does not match the representation.
AnnotationList PredictAnnotations(const AudioData& audio, Representation r,
                                  const PipelineConfig& cfg, int num_frames,
                                  uint64_t seed);

struct RepresentationResult {
  Representation representation = Representation::kFoa;
  MatchResult matches;
  SeldScores scores;
  QuadrantReport quadrants;
  PolyphonyReport polyphony;
};

struct PipelineResult {
  PipelineConfig config;
  int num_scenes = 0;  // after augmentation
  std::vector<RepresentationResult> results;
};

// Synthesizes the suite, optionally expands it with ACS rotations, renders
// and evaluates every configured representation. With an output directory the
// layout is scenes/, augmented/, rendered/<repr>/, predictions/<repr>/ and
// reports/; audio is written only when cfg.keep_audio is set. On failure all
// files written so far are removed.
PipelineResult RunPipeline(const PipelineConfig& cfg,
                           const std::optional<std::filesystem::path>& out_dir);

// Scores and analyses for one set of matches.
RepresentationResult Evaluate(Representation r, MatchResult matches,
                              double tolerance_deg);

std::string FormatScores(const SeldScores& s);
std::string FormatQuadrantReport(const QuadrantReport& q);
std::string FormatPolyphonyReport(const PolyphonyReport& p);
std::string FormatComparisonTable(const PipelineResult& result);
std::string FormatConfusionTriples(const QuadrantReport& q);

nlohmann::ordered_json ScoresToJson(const SeldScores& s);
nlohmann::ordered_json QuadrantReportToJson(const QuadrantReport& q);
nlohmann::ordered_json PolyphonyReportToJson(const PolyphonyReport& p);
nlohmann::ordered_json PipelineResultToJson(const PipelineResult& result);

}  // namespace seld

#endif  // SELD_PIPELINE_H_
