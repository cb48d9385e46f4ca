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

#include "seld/analysis_report.h"

#include <algorithm>
#include <map>

#include "seld/angles.h"

namespace seld {

Quadrant QuadrantOf(double azimuth_deg) {
  const double az = WrapAzimuth(azimuth_deg);
  if (az >= -45.0 && az < 45.0) return Quadrant::kFront;
  if (az >= 45.0 && az < 135.0) return Quadrant::kLeft;
  if (az >= -135.0 && az < -45.0) return Quadrant::kRight;
  return Quadrant::kBack;
}

std::string QuadrantName(Quadrant q) {
  switch (q) {
    case Quadrant::kFront:
      return "front";
    case Quadrant::kLeft:
      return "left";
    case Quadrant::kBack:
      return "back";
    case Quadrant::kRight:
      return "right";
  }
  return "front";
}

int64_t QuadrantReport::row_support(Quadrant q) const {
  int64_t n = 0;
  for (int64_t c : counts[static_cast<int>(q)]) n += c;
  return n;
}

double QuadrantReport::FrontBackConfusion() const {
  const int f = static_cast<int>(Quadrant::kFront);
  const int b = static_cast<int>(Quadrant::kBack);
  const int64_t support =
      row_support(Quadrant::kFront) + row_support(Quadrant::kBack);
  if (support == 0) return 0.0;
  return static_cast<double>(counts[f][b] + counts[b][f]) / support;
}

std::vector<ConfusionCell> QuadrantReport::PlotTriples() const {
  std::vector<ConfusionCell> out;
  for (int r = 0; r < kNumQuadrants; ++r) {
    for (int c = 0; c < kNumQuadrants; ++c) out.push_back({r, c, confusion[r][c]});
  }
  return out;
}

QuadrantReport QuadrantConfusion(const MatchResult& matches) {
  QuadrantReport report;
  std::array<double, kNumQuadrants> distance_sum{};
  for (const FrameClassMatch& cell : matches.cells) {
    report.unmatched_preds += cell.unmatched_preds.size();
    report.unmatched_refs += cell.unmatched_refs.size();
    for (const MatchedPair& p : cell.pairs) {
      const int r = static_cast<int>(QuadrantOf(p.ref.azimuth_deg));
      const int c = static_cast<int>(QuadrantOf(p.pred.azimuth_deg));
      ++report.counts[r][c];
      distance_sum[r] += p.distance_deg;
    }
  }
  for (int r = 0; r < kNumQuadrants; ++r) {
    const int64_t support = report.row_support(static_cast<Quadrant>(r));
    if (support == 0) continue;
    for (int c = 0; c < kNumQuadrants; ++c) {
      report.confusion[r][c] =
          static_cast<double>(report.counts[r][c]) / support;
    }
    report.per_quadrant_le[r] = distance_sum[r] / support;
  }
  return report;
}

PolyphonyReport PolyphonyBreakdown(const MatchResult& matches) {
  struct Frame {
    int64_t refs = 0;
    int64_t matched = 0;
    double distance_sum = 0.0;
  };
  std::map<std::pair<int, int>, Frame> frames;
  for (const FrameClassMatch& cell : matches.cells) {
    const int64_t refs = cell.pairs.size() + cell.unmatched_refs.size();
    if (refs == 0) continue;
    Frame& f = frames[{cell.sequence, cell.frame_index}];
    f.refs += refs;
    f.matched += cell.pairs.size();
    for (const MatchedPair& p : cell.pairs) f.distance_sum += p.distance_deg;
  }

  std::array<PolyphonyBucket, kMaxPolyphonyBucket> acc{};
  std::array<double, kMaxPolyphonyBucket> distance_sum{};
  for (const auto& [key, f] : frames) {
    const int k =
        static_cast<int>(std::min<int64_t>(f.refs, kMaxPolyphonyBucket));
    PolyphonyBucket& b = acc[k - 1];
    ++b.frames;
    b.refs += f.refs;
    b.matched += f.matched;
    distance_sum[k - 1] += f.distance_sum;
  }

  PolyphonyReport report;
  for (int k = 1; k <= kMaxPolyphonyBucket; ++k) {
    PolyphonyBucket b = acc[k - 1];
    if (b.frames == 0) continue;
    b.sources = k;
    b.localization_recall = static_cast<double>(b.matched) / b.refs;
    if (b.matched > 0) b.localization_error_deg = distance_sum[k - 1] / b.matched;
    report.buckets.push_back(b);
  }
  return report;
}

}  // namespace seld
