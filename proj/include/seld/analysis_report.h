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

#ifndef SELD_ANALYSIS_REPORT_H_
#define SELD_ANALYSIS_REPORT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seld/seld_metrics.h"

namespace seld {

// Half-open sectors: Front [-45, 45), Left [45, 135),
// Back [135, 180) u [-180, -135), Right [-135, -45).
enum class Quadrant { kFront = 0, kLeft = 1, kBack = 2, kRight = 3 };
inline constexpr int kNumQuadrants = 4;

// The azimuth is wrapped first, so any finite value is accepted.
Quadrant QuadrantOf(double azimuth_deg);
std::string QuadrantName(Quadrant q);

struct ConfusionCell {
  int row = 0;  // true quadrant
  int col = 0;  // predicted quadrant
  double value = 0.0;
};

struct QuadrantReport {
  // counts[true][predicted] over matched pairs.
  std::array<std::array<int64_t, kNumQuadrants>, kNumQuadrants> counts{};
  // Row-normalized counts; rows without support stay zero.
  std::array<std::array<double, kNumQuadrants>, kNumQuadrants> confusion{};
  // Mean pair distance per true quadrant, empty without support.
  std::array<std::optional<double>, kNumQuadrants> per_quadrant_le{};
  int64_t unmatched_preds = 0;
  int64_t unmatched_refs = 0;

  int64_t row_support(Quadrant q) const;
  // (n[Front->Back] + n[Back->Front]) / (n_Front + n_Back), 0 without support.
  double FrontBackConfusion() const;
  // Plot-ready (row, col, value) triples, row-major.
  std::vector<ConfusionCell> PlotTriples() const;
};

QuadrantReport QuadrantConfusion(const MatchResult& matches);

struct PolyphonyBucket {
  int sources = 1;  // 4 stands for "4 or more"
  int64_t frames = 0;
  int64_t refs = 0;
  int64_t matched = 0;
  double localization_recall = 0.0;
  std::optional<double> localization_error_deg;
};

struct PolyphonyReport {
  // Ascending by source count; buckets without frames are omitted.
  std::vector<PolyphonyBucket> buckets;
};

inline constexpr int kMaxPolyphonyBucket = 4;

// Buckets every reference record by the number of references in its
// (sequence, frame) across all classes.
PolyphonyReport PolyphonyBreakdown(const MatchResult& matches);

}  // namespace seld

#endif  // SELD_ANALYSIS_REPORT_H_
