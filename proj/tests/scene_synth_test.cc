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

#include "seld/scene_synth.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "seld/error.h"

namespace seld {
namespace {

EventSpec Event(double onset, double duration, double az, uint64_t seed = 1) {
  EventSpec e;
  e.onset_s = onset;
  e.duration_s = duration;
  e.direction = {az, 0.0};
  e.seed = seed;
  return e;
}

// Active sources per label frame from the event intervals alone.
std::map<int, int> OverlapCounts(const std::vector<EventSpec>& events,
                                 int frames) {
  std::map<int, int> counts;
  for (int f = 0; f < frames; ++f) {
    const double mid = (f + 0.5) * 0.1;
    int n = 0;
    for (const auto& e : events) {
      if (mid >= e.onset_s && mid < e.onset_s + e.duration_s) ++n;
    }
    if (n > 0) counts[f] = n;
  }
  return counts;
}

TEST(SynthesizeSceneTest, SingleBurstFrames) {
  SceneSpec spec;
  spec.events = {Event(0.0, 1.0, 90.0)};
  const LabeledScene scene = SynthesizeScene(spec);
  EXPECT_EQ(scene.audio.num_samples(), 120000u);
  ASSERT_EQ(scene.labels.size(), 10u);
  for (int f = 0; f < 10; ++f) {
    EXPECT_EQ(scene.labels[f].frame_index, f);
    EXPECT_EQ(scene.labels[f].class_index, 0);
    EXPECT_EQ(scene.labels[f].azimuth_deg, 90.0);
    EXPECT_EQ(scene.labels[f].elevation_deg, 0.0);
  }
}

TEST(SynthesizeSceneTest, EmptySceneIsSilent) {
  SceneSpec spec;
  const LabeledScene scene = SynthesizeScene(spec);
  EXPECT_TRUE(scene.labels.empty());
  for (int c = 0; c < kNumFoaChannels; ++c) {
    for (double x : scene.audio.channel(c)) ASSERT_EQ(x, 0.0);
  }
}

TEST(SynthesizeSceneTest, NoiseFloorOnly) {
  SceneSpec spec;
  spec.noise_floor_db = -40.0;
  const LabeledScene scene = SynthesizeScene(spec);
  EXPECT_TRUE(scene.labels.empty());
  double e = 0.0;
  for (double x : scene.audio.channel(kW)) e += x * x;
  EXPECT_NEAR(10.0 * std::log10(e / scene.audio.num_samples()), -40.0, 1.0);
}

TEST(SynthesizeSceneTest, OverlapMatchesIntervalOracle) {
  SceneSpec spec;
  spec.events = {Event(1.0, 1.1, 30.0, 1), Event(1.5, 1.1, -60.0, 2)};
  const LabeledScene scene = SynthesizeScene(spec);
  std::map<int, int> measured;
  for (const auto& a : scene.labels) ++measured[a.frame_index];
  EXPECT_EQ(measured, OverlapCounts(spec.events, 50));
  // Spans 10-14 single, 15-20 double, 21-25 single.
  EXPECT_EQ(measured[12], 1);
  EXPECT_EQ(measured[17], 2);
  EXPECT_EQ(measured[23], 1);

  const auto profile = PolyphonyProfile(scene.labels);
  std::map<int, int> hist;
  for (const auto& [f, n] : OverlapCounts(spec.events, 50)) ++hist[n];
  const double total = hist[1] + hist[2];
  EXPECT_NEAR(profile.at(1), hist[1] / total, 1e-12);
  EXPECT_NEAR(profile.at(2), hist[2] / total, 1e-12);
}

TEST(SynthesizeSceneTest, SameClassOverlapGetsDistinctSources) {
  SceneSpec spec;
  spec.events = {Event(0.0, 2.0, 30.0, 1), Event(0.5, 1.0, -60.0, 2)};
  const LabeledScene scene = SynthesizeScene(spec);
  std::set<int> sources;
  for (const auto& a : scene.labels) {
    if (a.frame_index == 10) sources.insert(a.source_index);
  }
  EXPECT_EQ(sources, (std::set<int>{0, 1}));
}

TEST(SynthesizeSceneTest, SingleEventProfile) {
  SceneSpec spec;
  spec.events = {Event(0.3, 1.0, 0.0)};
  const auto profile = PolyphonyProfile(SynthesizeScene(spec).labels);
  ASSERT_EQ(profile.size(), 1u);
  EXPECT_EQ(profile.at(1), 1.0);
}

TEST(SynthesizeSceneTest, Linearity) {
  SceneSpec a;
  a.events = {Event(0.2, 1.0, 40.0, 3)};
  SceneSpec b;
  b.events = {Event(1.0, 2.0, -120.0, 4)};
  b.events[0].signal = SignalKind::kChirp;
  SceneSpec ab;
  ab.events = {a.events[0], b.events[0]};
  const FoaBuffer sa = SynthesizeScene(a).audio;
  const FoaBuffer sb = SynthesizeScene(b).audio;
  const FoaBuffer sab = SynthesizeScene(ab).audio;
  for (int c = 0; c < kNumFoaChannels; ++c) {
    for (size_t n = 0; n < sab.num_samples(); ++n) {
      ASSERT_EQ(sab.channel(c)[n], sa.channel(c)[n] + sb.channel(c)[n]);
    }
  }
}

TEST(SynthesizeSceneTest, Deterministic) {
  SceneSpec spec;
  spec.events = {Event(0.0, 2.0, 10.0, 5)};
  spec.noise_floor_db = -50.0;
  spec.reverb.t60_s = 0.4;
  spec.rng_seed = 99;
  EXPECT_TRUE(SynthesizeScene(spec).audio == SynthesizeScene(spec).audio);
}

TEST(SynthesizeSceneTest, MovingSourceFollowsTrajectory) {
  SceneSpec spec;
  EventSpec e = Event(0.0, 2.0, 0.0);
  e.trajectory = {{0.0, -30.0}, {2.0, 30.0}};
  spec.events = {e};
  const LabeledScene scene = SynthesizeScene(spec);
  ASSERT_EQ(scene.labels.size(), 20u);
  EXPECT_NEAR(scene.labels.front().azimuth_deg, -30.0 + 60.0 * 0.05 / 2.0, 1e-9);
  EXPECT_NEAR(scene.labels.back().azimuth_deg, -30.0 + 60.0 * 1.95 / 2.0, 1e-9);
}

TEST(SynthesizeSceneTest, Errors) {
  SceneSpec spec;
  spec.events = {Event(4.5, 1.0, 0.0)};
  EXPECT_THROW(SynthesizeScene(spec), Error);
  spec.events = {Event(0.0, 1.0, 0.0)};
  spec.events[0].class_index = 13;
  EXPECT_THROW(SynthesizeScene(spec), Error);
  spec.events = {Event(0.0, 0.0, 0.0)};
  EXPECT_THROW(SynthesizeScene(spec), Error);
  spec.events.clear();
  for (int i = 0; i < 6; ++i) spec.events.push_back(Event(0.0, 1.0, 60.0 * i - 180.0, i));
  EXPECT_THROW(SynthesizeScene(spec), Error);
  spec.events.pop_back();
  EXPECT_NO_THROW(SynthesizeScene(spec));
}

TEST(GenerateSignalTest, LevelAndFades) {
  for (SignalKind kind :
       {SignalKind::kNoiseBurst, SignalKind::kToneComplex, SignalKind::kChirp}) {
    const auto s = GenerateSignal(kind, 24000, 24000, 7);
    double e = 0.0;
    for (double x : s) e += x * x;
    EXPECT_NEAR(std::sqrt(e / s.size()), 0.1, 0.01) << SignalKindName(kind);
    EXPECT_LT(std::fabs(s.front()), 1e-4);
  }
  EXPECT_EQ(ParseSignalKind("tones"), SignalKind::kToneComplex);
  EXPECT_THROW(ParseSignalKind("speech"), Error);
}

TEST(SuiteTest, SingleSourceAzimuthsAreUniform) {
  SingleSourceSuiteOptions opt;
  opt.num_scenes = 200;
  const auto specs = SingleSourceSuite(opt);
  ASSERT_EQ(specs.size(), 200u);
  std::array<int, 4> per_quadrant{};
  for (const auto& s : specs) {
    ASSERT_EQ(s.events.size(), 1u);
    const double az = s.events[0].direction.azimuth_deg;
    EXPECT_EQ(az, std::round(az));
    ++per_quadrant[static_cast<int>(std::floor((az + 180.0) / 90.0))];
  }
  for (int n : per_quadrant) EXPECT_NEAR(n, 50, 2);
}

TEST(SuiteTest, PolyphonyPresetMatchesTargetProfile) {
  PolyphonySuiteOptions opt;
  const auto specs = PolyphonySuite(opt);
  double total = 0.0;
  std::vector<AnnotationList> labels;
  for (const auto& s : specs) {
    total += s.length_s;
    // Labels only; the oracle re-derives them from the event intervals.
    std::vector<EventSpec> events = s.events;
    AnnotationList l;
    for (const auto& [f, n] : OverlapCounts(events, LabelFrameCount(s.length_s))) {
      for (int k = 0; k < n; ++k) l.push_back({f, 0, k, 0.0, 0.0});
    }
    labels.push_back(l);
  }
  EXPECT_GE(total, 600.0 - 1e-9);
  const auto profile = PolyphonyProfile(labels);
  const std::map<int, double> target = {{1, 0.56}, {2, 0.31}, {3, 0.10}, {4, 0.03}};
  for (const auto& [k, v] : target) {
    EXPECT_NEAR(profile.count(k) ? profile.at(k) : 0.0, v, 0.02) << k;
  }
  for (const auto& [k, v] : profile) EXPECT_LE(k, 4);
}

TEST(SuiteTest, SynmixNeverExceedsTwoSources) {
  SynmixSuiteOptions opt;
  opt.num_scenes = 3;
  for (const auto& s : SynmixSuite(opt)) {
    for (const auto& [f, n] : OverlapCounts(s.events, LabelFrameCount(s.length_s))) {
      ASSERT_LE(n, 2);
    }
  }
}

}  // namespace
}  // namespace seld
