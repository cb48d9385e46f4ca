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

#include "seld/seld_metrics.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "seld/angles.h"
#include "seld/assignment.h"

namespace seld {

double AngularDistance(const Direction& a, const Direction& b) {
  if (a.elevation_deg == 0.0 && b.elevation_deg == 0.0) {
    return std::fabs(WrapAzimuth(a.azimuth_deg - b.azimuth_deg));
  }
  const double ca = CosDeg(a.elevation_deg);
  const double cb = CosDeg(b.elevation_deg);
  const double ax = ca * CosDeg(a.azimuth_deg);
  const double ay = ca * SinDeg(a.azimuth_deg);
  const double az = SinDeg(a.elevation_deg);
  const double bx = cb * CosDeg(b.azimuth_deg);
  const double by = cb * SinDeg(b.azimuth_deg);
  const double bz = SinDeg(b.elevation_deg);
  const double cx = ay * bz - az * by;
  const double cy = az * bx - ax * bz;
  const double cz = ax * by - ay * bx;
  const double dot = ax * bx + ay * by + az * bz;
  return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), dot) *
         kDegreesFromRadians;
}

void MatchResult::Append(const MatchResult& other) {
  cells.insert(cells.end(), other.cells.begin(), other.cells.end());
  std::stable_sort(cells.begin(), cells.end(),
                   [](const FrameClassMatch& x, const FrameClassMatch& y) {
                     return std::tie(x.sequence, x.frame_index, x.class_index) <
                            std::tie(y.sequence, y.frame_index, y.class_index);
                   });
}

int64_t MatchResult::num_refs() const {
  int64_t n = 0;
  for (const auto& c : cells) n += c.pairs.size() + c.unmatched_refs.size();
  return n;
}

int64_t MatchResult::num_preds() const {
  int64_t n = 0;
  for (const auto& c : cells) n += c.pairs.size() + c.unmatched_preds.size();
  return n;
}

int64_t MatchResult::num_pairs() const {
  int64_t n = 0;
  for (const auto& c : cells) n += c.pairs.size();
  return n;
}

FrameClassMatch MatchFrame(std::span<const EventAnnotation> preds,
                           std::span<const EventAnnotation> refs) {
  FrameClassMatch out;
  if (!refs.empty()) {
    out.frame_index = refs.front().frame_index;
    out.class_index = refs.front().class_index;
  } else if (!preds.empty()) {
    out.frame_index = preds.front().frame_index;
    out.class_index = preds.front().class_index;
  }
  const int rows = static_cast<int>(preds.size());
  const int cols = static_cast<int>(refs.size());
  std::vector<double> cost(static_cast<size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      cost[static_cast<size_t>(i) * cols + j] =
          AngularDistance(preds[i].direction(), refs[j].direction());
    }
  }
  const std::vector<int> assign = SolveAssignment(cost, rows, cols);
  std::vector<char> ref_used(cols, false);
  for (int i = 0; i < rows; ++i) {
    if (assign[i] < 0) {
      out.unmatched_preds.push_back(preds[i]);
      continue;
    }
    ref_used[assign[i]] = true;
    out.pairs.push_back(
        {preds[i], refs[assign[i]], cost[static_cast<size_t>(i) * cols + assign[i]]});
  }
  for (int j = 0; j < cols; ++j) {
    if (!ref_used[j]) out.unmatched_refs.push_back(refs[j]);
  }
  return out;
}

MatchResult MatchAnnotations(const AnnotationList& preds,
                             const AnnotationList& refs, int sequence) {
  std::map<std::pair<int, int>, std::pair<AnnotationList, AnnotationList>> groups;
  for (const auto& p : preds) {
    groups[{p.frame_index, p.class_index}].first.push_back(p);
  }
  for (const auto& r : refs) {
    groups[{r.frame_index, r.class_index}].second.push_back(r);
  }
  MatchResult out;
  out.cells.reserve(groups.size());
  for (const auto& [key, lists] : groups) {
    FrameClassMatch cell = MatchFrame(lists.first, lists.second);
    cell.sequence = sequence;
    cell.frame_index = key.first;
    cell.class_index = key.second;
    out.cells.push_back(std::move(cell));
  }
  return out;
}

double ComposeSeldScore(double error_rate, double f_score,
                        std::optional<double> localization_error_deg,
                        double localization_recall) {
  const double le = localization_error_deg.value_or(180.0);
  return (std::min(error_rate, 1.0) + (1.0 - f_score) + le / 180.0 +
          (1.0 - localization_recall)) /
         4.0;
}

SeldScores ComputeScores(const MatchResult& matches, double tolerance_deg) {
  SeldScores s;
  double distance_sum = 0.0;
  int64_t substitutions = 0;
  int64_t deletions = 0;
  int64_t insertions = 0;

  size_t i = 0;
  while (i < matches.cells.size()) {
    // One label frame spans all classes with the same (sequence, frame).
    int64_t frame_fp = 0;
    int64_t frame_fn = 0;
    const int seq = matches.cells[i].sequence;
    const int frame = matches.cells[i].frame_index;
    for (; i < matches.cells.size() && matches.cells[i].sequence == seq &&
           matches.cells[i].frame_index == frame;
         ++i) {
      const FrameClassMatch& cell = matches.cells[i];
      int64_t tp = 0;
      for (const MatchedPair& p : cell.pairs) {
        distance_sum += p.distance_deg;
        if (p.distance_deg <= tolerance_deg) ++tp;
      }
      const int64_t beyond = cell.pairs.size() - tp;
      s.true_positives += tp;
      frame_fp += cell.unmatched_preds.size() + beyond;
      frame_fn += cell.unmatched_refs.size() + beyond;
      s.num_refs += cell.pairs.size() + cell.unmatched_refs.size();
      s.num_pairs += cell.pairs.size();
    }
    s.false_positives += frame_fp;
    s.false_negatives += frame_fn;
    substitutions += std::min(frame_fn, frame_fp);
    deletions += std::max<int64_t>(0, frame_fn - frame_fp);
    insertions += std::max<int64_t>(0, frame_fp - frame_fn);
  }

  const int64_t f_den =
      2 * s.true_positives + s.false_positives + s.false_negatives;
  s.f_score = f_den > 0 ? 2.0 * s.true_positives / f_den : 0.0;
  s.error_rate =
      s.num_refs > 0
          ? static_cast<double>(substitutions + deletions + insertions) /
                s.num_refs
          : 0.0;
  if (s.num_pairs > 0) s.localization_error_deg = distance_sum / s.num_pairs;
  s.localization_recall =
      s.num_refs > 0 ? static_cast<double>(s.num_pairs) / s.num_refs : 0.0;
  s.seld_score = ComposeSeldScore(s.error_rate, s.f_score,
                                  s.localization_error_deg,
                                  s.localization_recall);
  return s;
}

}  // namespace seld
