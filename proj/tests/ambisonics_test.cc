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

#include "seld/ambisonics.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "seld/analysis_report.h"
#include "seld/angles.h"
#include "seld/error.h"

namespace seld {
namespace {

std::vector<double> Noise(size_t n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 0.3);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

void ExpectGains(const FoaBuffer& foa, double w, double y, double z, double x) {
  ASSERT_EQ(foa.num_samples(), 1u);
  EXPECT_NEAR(foa.channel(kW)[0], w, 1e-15);
  EXPECT_NEAR(foa.channel(kY)[0], y, 1e-15);
  EXPECT_NEAR(foa.channel(kZ)[0], z, 1e-15);
  EXPECT_NEAR(foa.channel(kX)[0], x, 1e-15);
}

void ExpectClose(const FoaBuffer& a, const FoaBuffer& b, double tol) {
  ASSERT_EQ(a.num_samples(), b.num_samples());
  for (int c = 0; c < kNumFoaChannels; ++c) {
    for (size_t n = 0; n < a.num_samples(); ++n) {
      ASSERT_NEAR(a.channel(c)[n], b.channel(c)[n], tol) << "channel " << c;
    }
  }
}

TEST(EncodeTest, FrontImpulse) {
  const std::vector<double> impulse = {1.0};
  ExpectGains(EncodePointSource(impulse, {0.0, 0.0}, 24000), 1, 0, 0, 1);
}

TEST(EncodeTest, LeftImpulse) {
  const std::vector<double> impulse = {1.0};
  ExpectGains(EncodePointSource(impulse, {90.0, 0.0}, 24000), 1, 1, 0, 0);
}

TEST(EncodeTest, MatchesGainLaw) {
  const std::vector<double> impulse = {1.0};
  for (double el : {0.0, 25.0, -60.0}) {
    const double az = 37.0;
    const double a = az * kPi / 180.0;
    const double e = el * kPi / 180.0;
    ExpectGains(EncodePointSource(impulse, {az, el}, 24000), 1.0,
                std::sin(a) * std::cos(e), std::sin(e),
                std::cos(a) * std::cos(e));
  }
}

TEST(EncodeTest, RejectsEmptySignal) {
  EXPECT_THROW(EncodePointSource({}, {0.0, 0.0}, 24000), Error);
}

TEST(EncodeTest, RejectsInvalidDirection) {
  const std::vector<double> s = {1.0};
  EXPECT_THROW(EncodePointSource(s, {0.0, 95.0}, 24000), Error);
}

TEST(AcsRotateTest, MatchesReEncodingOnGrid) {
  const std::vector<double> s = Noise(256, 3);
  for (int az = -180; az < 180; az += 5) {
    const FoaBuffer foa = EncodePointSource(s, {double(az), 0.0}, 24000);
    for (RotationStep step : kAcsSteps) {
      const double rotated = WrapAzimuth(az + RotationDegrees(step));
      ExpectClose(AcsRotate(foa, step),
                  EncodePointSource(s, {rotated, 0.0}, 24000), 1e-12);
    }
  }
}

TEST(AcsRotateTest, Examples) {
  const std::vector<double> s = Noise(64, 5);
  const FoaBuffer foa = EncodePointSource(s, {30.0, 0.0}, 24000);
  ExpectClose(AcsRotate(foa, RotationStep::kR180),
              EncodePointSource(s, {-150.0, 0.0}, 24000), 1e-12);
  ExpectClose(AcsRotate(foa, RotationStep::kR90),
              EncodePointSource(s, {120.0, 0.0}, 24000), 1e-12);
}

TEST(AcsRotateTest, FourQuarterTurnsIsIdentity) {
  std::array<std::vector<double>, 4> ch;
  for (int c = 0; c < 4; ++c) ch[c] = Noise(300, 10 + c);
  const FoaBuffer foa(ch, 24000);
  FoaBuffer r = foa;
  for (int i = 0; i < 4; ++i) r = AcsRotate(r, RotationStep::kR90);
  EXPECT_TRUE(r == foa);
}

TEST(AcsRotateTest, PreservesEnergy) {
  std::array<std::vector<double>, 4> ch;
  for (int c = 0; c < 4; ++c) ch[c] = Noise(300, 20 + c);
  const FoaBuffer foa(ch, 24000);
  auto energy = [](std::span<const double> v) {
    double e = 0.0;
    for (double x : v) e += x * x;
    return e;
  };
  for (RotationStep step : kAcsSteps) {
    const FoaBuffer r = AcsRotate(foa, step);
    EXPECT_EQ(energy(r.channel(kW)), energy(foa.channel(kW)));
    EXPECT_EQ(energy(r.channel(kZ)), energy(foa.channel(kZ)));
    EXPECT_EQ(energy(r.channel(kX)) + energy(r.channel(kY)),
              energy(foa.channel(kX)) + energy(foa.channel(kY)));
  }
}

TEST(AcsLabelsTest, Examples) {
  auto rot = [](double az, RotationStep s) {
    return AcsRotateLabels({{0, 0, 0, az, 0.0}}, s)[0].azimuth_deg;
  };
  EXPECT_EQ(rot(30.0, RotationStep::kR180), -150.0);
  EXPECT_EQ(rot(-170.0, RotationStep::kR90), -80.0);
  EXPECT_EQ(rot(170.0, RotationStep::kR90), -100.0);
}

TEST(AcsLabelsTest, KeepsOtherFields) {
  const AnnotationList in = {{7, 3, 2, 45.0, 10.0}};
  const EventAnnotation out = AcsRotateLabels(in, RotationStep::kR270)[0];
  EXPECT_EQ(out.frame_index, 7);
  EXPECT_EQ(out.class_index, 3);
  EXPECT_EQ(out.source_index, 2);
  EXPECT_EQ(out.elevation_deg, 10.0);
  EXPECT_EQ(out.azimuth_deg, -45.0);
}

TEST(AcsLabelsTest, GroupAction) {
  AnnotationList labels;
  for (int az = -180; az < 180; az += 7) labels.push_back({0, 0, 0, double(az), 0.0});
  const auto r90 = [](const AnnotationList& l) {
    return AcsRotateLabels(l, RotationStep::kR90);
  };
  EXPECT_EQ(r90(r90(labels)), AcsRotateLabels(labels, RotationStep::kR180));
  EXPECT_EQ(AcsRotateLabels(r90(labels), RotationStep::kR270), labels);
  for (const auto& a : r90(labels)) {
    EXPECT_GE(a.azimuth_deg, -180.0);
    EXPECT_LT(a.azimuth_deg, 180.0);
  }
}

TEST(ExpandAcsTest, FourMembersIdentityFirst) {
  const std::vector<double> s = Noise(128, 7);
  LabeledScene scene{EncodePointSource(s, {10.0, 0.0}, 24000),
                     {{0, 0, 0, 10.0, 0.0}, {1, 0, 0, 10.0, 0.0}}};
  const auto out = ExpandAcs(scene);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_TRUE(out[0].audio == scene.audio);
  EXPECT_EQ(out[0].labels, scene.labels);
  std::vector<double> az;
  for (const auto& m : out) az.push_back(m.labels[0].azimuth_deg);
  EXPECT_EQ(az, (std::vector<double>{10.0, 100.0, -170.0, -80.0}));
}

TEST(ExpandAcsTest, OneQuadrantCoversAllFourEqually) {
  LabeledScene scene{FoaBuffer(1024, 24000), {}};
  for (int az = -40; az < 45; az += 3) scene.labels.push_back({0, 0, 0, double(az), 0.0});
  std::map<Quadrant, int> counts;
  for (const auto& m : ExpandAcs(scene)) {
    for (const auto& a : m.labels) ++counts[QuadrantOf(a.azimuth_deg)];
  }
  ASSERT_EQ(counts.size(), 4u);
  for (const auto& [q, n] : counts) EXPECT_EQ(n, int(scene.labels.size()));
}

TEST(AnglesTest, WrapHalfOpen) {
  EXPECT_EQ(WrapAzimuth(180.0), -180.0);
  EXPECT_EQ(WrapAzimuth(-180.0), -180.0);
  EXPECT_EQ(WrapAzimuth(540.0), -180.0);
  EXPECT_EQ(WrapAzimuth(-190.0), 170.0);
  EXPECT_EQ(WrapAzimuth(359.0), -1.0);
}

TEST(AnglesTest, ExactCardinals) {
  EXPECT_EQ(SinDeg(90.0), 1.0);
  EXPECT_EQ(CosDeg(90.0), 0.0);
  EXPECT_EQ(SinDeg(180.0), 0.0);
  EXPECT_EQ(CosDeg(-180.0), -1.0);
  EXPECT_EQ(SinDeg(45.0), SinDeg(135.0));
  for (double a = -360.0; a <= 360.0; a += 0.5) {
    ASSERT_NEAR(SinDeg(a), std::sin(a * kPi / 180.0), 4e-15);
    ASSERT_NEAR(CosDeg(a), std::cos(a * kPi / 180.0), 4e-15);
  }
}

}  // namespace
}  // namespace seld
