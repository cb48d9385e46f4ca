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

#include <gtest/gtest.h>

#include <cmath>

#include "seld/angles.h"

namespace seld {
namespace {

TEST(QuadrantTest, Examples) {
  EXPECT_EQ(QuadrantOf(50.0), Quadrant::kLeft);
  EXPECT_EQ(QuadrantOf(0.0), Quadrant::kFront);
  EXPECT_EQ(QuadrantOf(-179.5), Quadrant::kBack);
}

TEST(QuadrantTest, Boundaries) {
  EXPECT_EQ(QuadrantOf(45.0), Quadrant::kLeft);
  EXPECT_EQ(QuadrantOf(-45.0), Quadrant::kFront);
  EXPECT_EQ(QuadrantOf(135.0), Quadrant::kBack);
  EXPECT_EQ(QuadrantOf(-135.0), Quadrant::kRight);
  EXPECT_EQ(QuadrantOf(-180.0), Quadrant::kBack);
  EXPECT_EQ(QuadrantOf(180.0), Quadrant::kBack);
}

TEST(QuadrantTest, PartitionsTheCircle) {
  for (double az = -180.0; az < 180.0; az += 0.25) {
    int hits = 0;
    hits += az >= -45.0 && az < 45.0;
    hits += az >= 45.0 && az < 135.0;
    hits += az >= 135.0 || az < -135.0;
    hits += az >= -135.0 && az < -45.0;
    ASSERT_EQ(hits, 1);
    const Quadrant q = QuadrantOf(az);
    const bool ok = (q == Quadrant::kFront && az >= -45.0 && az < 45.0) ||
                    (q == Quadrant::kLeft && az >= 45.0 && az < 135.0) ||
                    (q == Quadrant::kBack && (az >= 135.0 || az < -135.0)) ||
                    (q == Quadrant::kRight && az >= -135.0 && az < -45.0);
    ASSERT_TRUE(ok) << az;
  }
}

AnnotationList Grid() {
  AnnotationList refs;
  int f = 0;
  for (int az = -180; az < 180; az += 1) refs.push_back({f++, 0, 0, double(az), 0.0});
  return refs;
}

TEST(QuadrantConfusionTest, IdentityWhenPerfect) {
  const AnnotationList refs = Grid();
  const QuadrantReport q = QuadrantConfusion(MatchAnnotations(refs, refs));
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) EXPECT_EQ(q.confusion[r][c], r == c ? 1.0 : 0.0);
    EXPECT_EQ(*q.per_quadrant_le[r], 0.0);
  }
  EXPECT_EQ(q.FrontBackConfusion(), 0.0);
  const auto triples = q.PlotTriples();
  ASSERT_EQ(triples.size(), 16u);
  EXPECT_EQ(triples[5].row, 1);
  EXPECT_EQ(triples[5].col, 1);
  EXPECT_EQ(triples[5].value, 1.0);
}

TEST(QuadrantConfusionTest, MirrorMovesFrontBackOnly) {
  const AnnotationList refs = Grid();
  AnnotationList preds = refs;
  for (auto& p : preds) p.azimuth_deg = WrapAzimuth(180.0 - p.azimuth_deg);
  const QuadrantReport q = QuadrantConfusion(MatchAnnotations(preds, refs));

  // Oracle: count quadrant pairs of the mirror map directly.
  std::array<std::array<int64_t, 4>, 4> expected{};
  for (const auto& r : refs) {
    ++expected[static_cast<int>(QuadrantOf(r.azimuth_deg))]
              [static_cast<int>(QuadrantOf(WrapAzimuth(180.0 - r.azimuth_deg)))];
  }
  EXPECT_EQ(q.counts, expected);
  const int F = 0, L = 1, B = 2, R = 3;
  EXPECT_GT(q.confusion[F][B], 0.95);
  EXPECT_GT(q.confusion[B][F], 0.95);
  EXPECT_GT(q.confusion[L][L], 0.95);
  EXPECT_GT(q.confusion[R][R], 0.95);
  EXPECT_GT(q.FrontBackConfusion(), 0.95);
  for (int r = 0; r < 4; ++r) {
    double sum = 0.0;
    for (int c = 0; c < 4; ++c) sum += q.confusion[r][c];
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(QuadrantConfusionTest, PerQuadrantErrorAndUnmatched) {
  const AnnotationList refs = {{0, 0, 0, 0, 0}, {1, 0, 0, 10, 0}, {2, 0, 0, 90, 0}};
  const AnnotationList preds = {{0, 0, 0, 4, 0}, {1, 0, 0, 20, 0}, {3, 0, 0, 5, 0}};
  const QuadrantReport q = QuadrantConfusion(MatchAnnotations(preds, refs));
  EXPECT_EQ(*q.per_quadrant_le[0], 7.0);
  EXPECT_FALSE(q.per_quadrant_le[1].has_value());
  EXPECT_EQ(q.unmatched_preds, 1);
  EXPECT_EQ(q.unmatched_refs, 1);
  EXPECT_EQ(q.row_support(Quadrant::kLeft), 0);
  EXPECT_EQ(q.confusion[1][1], 0.0);
}

TEST(PolyphonyTest, SingleSourcePerfect) {
  const AnnotationList refs = Grid();
  const PolyphonyReport p = PolyphonyBreakdown(MatchAnnotations(refs, refs));
  ASSERT_EQ(p.buckets.size(), 1u);
  EXPECT_EQ(p.buckets[0].sources, 1);
  EXPECT_EQ(p.buckets[0].localization_recall, 1.0);
  EXPECT_EQ(p.buckets[0].frames, 360);
}

TEST(PolyphonyTest, OneEstimatePerFrameCapsRecall) {
  AnnotationList refs;
  AnnotationList preds;
  for (int f = 0; f < 40; ++f) {
    refs.push_back({f, 0, 0, 30.0, 0});
    refs.push_back({f, 0, 1, -60.0, 0});
    preds.push_back({f, 0, 0, f % 2 ? 30.0 : -60.0, 0});
  }
  const PolyphonyReport p = PolyphonyBreakdown(MatchAnnotations(preds, refs));
  ASSERT_EQ(p.buckets.size(), 1u);
  EXPECT_EQ(p.buckets[0].sources, 2);
  EXPECT_LE(p.buckets[0].localization_recall, 0.5);
}

TEST(PolyphonyTest, BucketsAndWeightedRecall) {
  AnnotationList refs;
  AnnotationList preds;
  int f = 0;
  for (int k : {1, 1, 2, 3, 5, 6, 2, 1}) {
    for (int s = 0; s < k; ++s) refs.push_back({f, s % 2, s, -170.0 + 40 * s, 0});
    preds.push_back({f, 0, 0, -170.0, 0});
    ++f;
  }
  const MatchResult m = MatchAnnotations(preds, refs);
  const PolyphonyReport p = PolyphonyBreakdown(m);
  ASSERT_EQ(p.buckets.size(), 4u);
  EXPECT_EQ(p.buckets[3].sources, 4);
  EXPECT_EQ(p.buckets[3].frames, 2);  // 5 and 6 sources
  int64_t frames = 0;
  double weighted = 0.0;
  int64_t refs_total = 0;
  for (const auto& b : p.buckets) {
    EXPECT_GE(b.localization_recall, 0.0);
    EXPECT_LE(b.localization_recall, 1.0);
    frames += b.frames;
    refs_total += b.refs;
    weighted += b.localization_recall * b.refs;
  }
  EXPECT_EQ(frames, 8);
  EXPECT_NEAR(weighted / refs_total, ComputeScores(m).localization_recall, 1e-9);
}

TEST(PolyphonyTest, EmptyBucketsOmitted) {
  const AnnotationList refs = {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {1, 1, 0, 9, 0},
                               {1, 2, 0, 9, 0}};
  const PolyphonyReport p = PolyphonyBreakdown(MatchAnnotations({}, refs));
  ASSERT_EQ(p.buckets.size(), 2u);
  EXPECT_EQ(p.buckets[0].sources, 1);
  EXPECT_EQ(p.buckets[1].sources, 3);
  EXPECT_FALSE(p.buckets[1].localization_error_deg.has_value());
}

}  // namespace
}  // namespace seld
