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

#ifndef SELD_SELD_METRICS_H_
#define SELD_SELD_METRICS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "seld/annotation.h"

namespace seld {

inline constexpr double kDefaultToleranceDeg = 20.0;

// Great-circle distance in degrees, in [0, 180]. Two horizontal directions
// give |wrap(az1 - az2)| exactly.
double AngularDistance(const Direction& a, const Direction& b);

struct MatchedPair {
  EventAnnotation pred;
  EventAnnotation ref;
  double distance_deg = 0.0;
};

// Matching outcome for one (sequence, frame, class) cell. `sequence` tells
// scenes apart when results of several files are pooled.
struct FrameClassMatch {
  int sequence = 0;
  int frame_index = 0;
  int class_index = 0;
  std::vector<MatchedPair> pairs;
  AnnotationList unmatched_preds;
  AnnotationList unmatched_refs;
};

struct MatchResult {
  // Sorted by (sequence, frame, class).
  std::vector<FrameClassMatch> cells;

  // Appends another result; cells must come from different sequences.
  void Append(const MatchResult& other);
  int64_t num_refs() const;
  int64_t num_preds() const;
  int64_t num_pairs() const;
};

// Minimum total angular distance assignment between predictions and
// references of one frame and class.
FrameClassMatch MatchFrame(std::span<const EventAnnotation> preds,
                           std::span<const EventAnnotation> refs);

// Groups by (frame, class) and matches every cell.
MatchResult MatchAnnotations(const AnnotationList& preds,
                             const AnnotationList& refs, int sequence = 0);

struct SeldScores {
  double error_rate = 0.0;
  double f_score = 0.0;
  // Mean distance over matched pairs; empty when nothing was matched.
  std::optional<double> localization_error_deg;
  double localization_recall = 0.0;
  double seld_score = 0.0;

  int64_t true_positives = 0;
  int64_t false_positives = 0;
  int64_t false_negatives = 0;
  int64_t num_refs = 0;
  int64_t num_pairs = 0;
};

// (min(ER, 1) + (1 - F) + LE / 180 + (1 - LR)) / 4. A missing LE counts as
// the worst case, 180 degrees.
double ComposeSeldScore(double error_rate, double f_score,
                        std::optional<double> localization_error_deg,
                        double localization_recall);

// Location-dependent detection (a pair is a TP when its distance is within
// the tolerance, otherwise it counts as both FP and FN), frame-level error
// rate and threshold-free LE/LR. Ratios with a zero denominator are 0.
SeldScores ComputeScores(const MatchResult& matches,
                         double tolerance_deg = kDefaultToleranceDeg);

}  // namespace seld

#endif  // SELD_SELD_METRICS_H_
