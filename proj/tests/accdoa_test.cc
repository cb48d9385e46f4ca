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

#include "seld/accdoa.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "seld/angles.h"
#include "seld/error.h"
#include "seld/tensor_io.h"

namespace seld {
namespace {

TEST(EncodeAccdoaTest, FrontAndLeft) {
  const AccdoaGrid g = EncodeAccdoa({{7, 2, 0, 0.0, 0.0}, {3, 1, 0, 90.0, 0.0}}, 10);
  EXPECT_EQ(g.classes, 13);
  EXPECT_EQ(g.tracks, 3);
  const double* v = g.vec(7, 2, 0);
  EXPECT_EQ(v[0], 1.0);
  EXPECT_EQ(v[1], 0.0);
  EXPECT_EQ(v[2], 0.0);
  const double* u = g.vec(3, 1, 0);
  EXPECT_EQ(u[0], 0.0);
  EXPECT_EQ(u[1], 1.0);
  int nonzero = 0;
  for (double x : g.data) nonzero += x != 0.0;
  EXPECT_EQ(nonzero, 2);
}

TEST(EncodeAccdoaTest, SameClassUsesTracksInSourceOrder) {
  const AccdoaGrid g = EncodeAccdoa({{0, 4, 5, -30.0, 0.0}, {0, 4, 2, 30.0, 0.0}}, 1);
  const double* t0 = g.vec(0, 4, 0);
  const double* t1 = g.vec(0, 4, 1);
  EXPECT_NEAR(std::atan2(t0[1], t0[0]) * kDegreesFromRadians, 30.0, 1e-12);
  const double dot = t0[0] * t1[0] + t0[1] * t1[1] + t0[2] * t1[2];
  EXPECT_NEAR(dot, std::cos(60.0 * kPi / 180.0), 1e-12);
}

TEST(EncodeAccdoaTest, Errors) {
  EXPECT_THROW(EncodeAccdoa({{5, 0, 0, 0.0, 0.0}}, 5), Error);
  EXPECT_THROW(EncodeAccdoa({{0, 13, 0, 0.0, 0.0}}, 5), Error);
  EXPECT_THROW(EncodeAccdoa({{0, 0, 0, 0.0, 0.0}, {0, 0, 0, 9.0, 0.0}}, 5), Error);
  AnnotationList four;
  for (int s = 0; s < 4; ++s) four.push_back({0, 0, s, 10.0 * s, 0.0});
  EXPECT_THROW(EncodeAccdoa(four, 1), Error);
  EXPECT_NO_THROW(EncodeAccdoa(four, 1, 4));
}

TEST(DecodeAccdoaTest, Threshold) {
  AccdoaGrid g(1, 13, 3);
  g.vec(0, 0, 0)[0] = 0.7;
  g.vec(0, 1, 0)[0] = 0.3;
  const AnnotationList a = DecodeAccdoa(g);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].class_index, 0);
  EXPECT_EQ(a[0].azimuth_deg, 0.0);
  EXPECT_TRUE(DecodeAccdoa(AccdoaGrid(4, 13, 3)).empty());
  EXPECT_THROW(DecodeAccdoa(g, 0.0), Error);
  EXPECT_THROW(DecodeAccdoa(g, 1.0), Error);
}

TEST(DecodeAccdoaTest, ScaleInvariantAzimuth) {
  AccdoaGrid g(1, 13, 3);
  double* v = g.vec(0, 3, 2);
  v[0] = -0.4;
  v[1] = 0.5;
  const double az = DecodeAccdoa(g)[0].azimuth_deg;
  for (double s : {1.5, 3.0, 100.0}) {
    AccdoaGrid h = g;
    for (double& x : h.data) x *= s;
    const AnnotationList a = DecodeAccdoa(h);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].source_index, 2);
    EXPECT_NEAR(a[0].azimuth_deg, az, 1e-12);
  }
}

TEST(AccdoaRoundTripTest, RandomSets) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> az(-180.0, 180.0);
  std::uniform_int_distribution<int> count(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    AnnotationList a;
    for (int f = 0; f < 30; ++f) {
      for (int c = 0; c < 13; ++c) {
        const int n = count(rng) == 3 ? count(rng) : 0;
        for (int s = 0; s < n; ++s) a.push_back({f, c, s, WrapAzimuth(az(rng)), 0.0});
      }
    }
    const AccdoaGrid g = EncodeAccdoa(a, 30);
    for (size_t i = 0; i < g.data.size(); i += 3) {
      const double n = std::hypot(g.data[i], g.data[i + 1], g.data[i + 2]);
      ASSERT_TRUE(n == 0.0 || std::fabs(n - 1.0) < 1e-12);
    }
    const AnnotationList b = DecodeAccdoa(g);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      ASSERT_EQ(a[i].frame_index, b[i].frame_index);
      ASSERT_EQ(a[i].class_index, b[i].class_index);
      ASSERT_EQ(a[i].source_index, b[i].source_index);
      ASSERT_LE(std::fabs(WrapAzimuth(a[i].azimuth_deg - b[i].azimuth_deg)), 1e-9);
      ASSERT_EQ(b[i].elevation_deg, 0.0);
    }
  }
}

TEST(TensorIoTest, RoundTripGrid) {
  const AccdoaGrid g = EncodeAccdoa({{1, 2, 0, 45.0, 0.0}}, 3);
  const auto path = std::filesystem::temp_directory_path() / "seld_accdoa_test.bin";
  WriteTensor(path, ToFlat(g));
  const FlatTensor t = ReadTensor(path);
  EXPECT_EQ(t.dims, (std::vector<uint64_t>{3, 13, 3, 3}));
  const AccdoaGrid back = AccdoaFromFlat(t);
  for (size_t i = 0; i < g.data.size(); ++i) {
    ASSERT_EQ(back.data[i], static_cast<double>(static_cast<float>(g.data[i])));
  }
  EXPECT_EQ(std::filesystem::file_size(path), 8 + 4 + 4 + 4 * 8 + g.data.size() * 4);
  std::filesystem::remove(path);
}

TEST(TensorIoTest, RejectsForeignFiles) {
  const auto path = std::filesystem::temp_directory_path() / "seld_not_tensor.bin";
  {
    std::ofstream out(path, std::ios::binary);
    out << "RIFF0000WAVE";
  }
  EXPECT_THROW(ReadTensor(path), Error);
  std::filesystem::remove(path);
  EXPECT_THROW(ReadTensor(path), Error);
  FlatTensor bad;
  bad.dims = {2, 2};
  bad.data = {1.0f};
  EXPECT_THROW(WriteTensor(path, bad), Error);
}

}  // namespace
}  // namespace seld
