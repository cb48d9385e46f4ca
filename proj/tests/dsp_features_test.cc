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

#include "seld/dsp_features.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "seld/ambisonics.h"
#include "seld/angles.h"
#include "seld/error.h"

namespace seld {
namespace {

std::vector<double> Noise(size_t n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 0.1);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

std::vector<Spectrogram> FoaSpecs(const FoaBuffer& foa) {
  std::vector<Spectrogram> s;
  for (int c = 0; c < kNumFoaChannels; ++c) s.push_back(Stft(foa.channel(c), {}));
  return s;
}

double MeanIvAzimuth(const FeatureTensor& iv) {
  double x = 0.0;
  double y = 0.0;
  for (int f = 0; f < iv.frames; ++f) {
    for (int b = 0; b < iv.bins; ++b) {
      x += iv.at(f, b, 0);
      y += iv.at(f, b, 1);
    }
  }
  return std::atan2(y, x) * kDegreesFromRadians;
}

TEST(StftTest, FrameCount) {
  const StftConfig cfg;
  EXPECT_EQ(cfg.NumFrames(120000), (120000 - 1024) / 480 + 1);
  const Spectrogram s = Stft(std::vector<double>(120000, 0.0), cfg);
  EXPECT_EQ(s.frames(), 248);
  EXPECT_EQ(s.bins(), 513);
  EXPECT_THROW(Stft(std::vector<double>(1000, 0.0), cfg), Error);
}

TEST(StftTest, ZeroSignal) {
  const Spectrogram s = Stft(std::vector<double>(5000, 0.0), {});
  for (int f = 0; f < s.frames(); ++f) {
    for (int k = 0; k < s.bins(); ++k) ASSERT_EQ(std::abs(s.at(f, k)), 0.0);
  }
}

TEST(StftTest, SinePeakBin) {
  std::vector<double> x(24000);
  for (size_t n = 0; n < x.size(); ++n) x[n] = std::sin(2.0 * kPi * 1000.0 * n / 24000.0);
  const Spectrogram s = Stft(x, {});
  const int expected = static_cast<int>(std::lround(1000.0 * 1024 / 24000.0));
  EXPECT_EQ(expected, 43);
  for (int f = 0; f < s.frames(); ++f) {
    int best = 0;
    for (int k = 1; k < s.bins(); ++k) {
      if (std::abs(s.at(f, k)) > std::abs(s.at(f, best))) best = k;
    }
    ASSERT_EQ(best, expected);
  }
}

TEST(StftTest, MatchesDirectDft) {
  const auto x = Noise(1024, 2);
  const Spectrogram s = Stft(x, {});
  for (int k : {0, 1, 17, 256, 512}) {
    std::complex<double> acc = 0.0;
    for (int n = 0; n < 1024; ++n) {
      const double w = 0.5 - 0.5 * std::cos(2.0 * kPi * n / 1024.0);
      acc += w * x[n] * std::polar(1.0, -2.0 * kPi * k * n / 1024.0);
    }
    EXPECT_NEAR(std::abs(s.at(0, k) - acc), 0.0, 1e-9) << k;
  }
}

TEST(MelTest, ZeroSpectrogramHitsFloor) {
  const MelFilterbank bank(24000, 1024);
  const FeatureTensor m = MelSpectrogram(Stft(std::vector<double>(5000, 0.0), {}), bank);
  EXPECT_EQ(m.bins, 64);
  for (double v : m.data) ASSERT_EQ(v, std::log(kLogMelFloor));
}

TEST(MelTest, WhiteNoisePositiveInEveryBand) {
  const MelFilterbank bank(24000, 1024);
  const FeatureTensor p = MelPower(Stft(Noise(24000, 3), {}), bank);
  for (double v : p.data) ASSERT_GT(v, 0.0);
}

TEST(MelTest, FilterbankAudit) {
  const MelFilterbank bank(24000, 1024);
  ASSERT_EQ(bank.num_bands(), 64);
  ASSERT_EQ(bank.num_bins(), 513);
  for (int k = 0; k < bank.num_bins(); ++k) {
    const double hz = k * 24000.0 / 1024.0;
    if (hz >= 12000.0) continue;
    double total = 0.0;
    for (int b = 0; b < 64; ++b) total += bank.weight(b, k);
    ASSERT_GT(total, 0.0) << "bin " << k;
  }
  for (int b = 0; b < 64; ++b) {
    double sum = 0.0;
    for (int k = 0; k < bank.num_bins(); ++k) {
      ASSERT_GE(bank.weight(b, k), 0.0);
      sum += bank.weight(b, k);
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
  EXPECT_NEAR(MelFilterbank::HzToMel(700.0), 2595.0 * std::log10(2.0), 1e-9);
  EXPECT_NEAR(MelFilterbank::MelToHz(MelFilterbank::HzToMel(4321.0)), 4321.0, 1e-9);
}

TEST(MelTest, SceneShape) {
  const FoaBuffer foa = EncodePointSource(Noise(120000, 4), {20.0, 0.0}, 24000);
  const MelFilterbank bank(24000, 1024);
  std::vector<FeatureTensor> parts;
  for (const auto& s : FoaSpecs(foa)) parts.push_back(MelSpectrogram(s, bank));
  const FeatureTensor stacked = StackChannels(parts);
  EXPECT_EQ(stacked.frames, 248);
  EXPECT_EQ(stacked.bins, 64);
  EXPECT_EQ(stacked.channels, 4);
  EXPECT_TRUE(stacked.AllFinite());
  const auto chunks = ChunkFeatures(stacked);
  ASSERT_EQ(chunks.size(), 1u);
  EXPECT_EQ(chunks[0].frames, 250);
}

TEST(IntensityTest, FrontAndLeft) {
  const MelFilterbank bank(24000, 1024);
  for (double az : {0.0, 90.0}) {
    const FoaBuffer foa = EncodePointSource(Noise(24000, 5), {az, 0.0}, 24000);
    const FeatureTensor iv = IntensityVectors(FoaSpecs(foa), bank);
    EXPECT_EQ(iv.channels, 3);
    EXPECT_NEAR(MeanIvAzimuth(iv), az, 1.0);
    // Plane-wave length 3/4 in every band.
    const double len = std::hypot(iv.at(3, 20, 0), iv.at(3, 20, 1), iv.at(3, 20, 2));
    EXPECT_NEAR(len, kPlaneWaveIntensity, 1e-9);
  }
}

TEST(IntensityTest, GridWithinTwoDegrees) {
  const MelFilterbank bank(24000, 1024);
  const auto s = Noise(12000, 6);
  for (int az = -180; az < 180; az += 5) {
    const FoaBuffer foa = EncodePointSource(s, {double(az), 0.0}, 24000);
    const double est = MeanIvAzimuth(IntensityVectors(FoaSpecs(foa), bank));
    ASSERT_LE(std::fabs(WrapAzimuth(est - az)), 2.0) << az;
  }
}

TEST(IntensityTest, ZeroInputGivesZeroVectors) {
  const MelFilterbank bank(24000, 1024);
  const FoaBuffer foa(5000, 24000);
  const FeatureTensor iv = IntensityVectors(FoaSpecs(foa), bank);
  for (double v : iv.data) ASSERT_EQ(v, 0.0);
}

TEST(IntensityTest, RejectsWrongChannelCount) {
  const MelFilterbank bank(24000, 1024);
  std::vector<Spectrogram> three(3, Stft(Noise(2000, 1), {}));
  EXPECT_THROW(IntensityVectors(three, bank), Error);
}

std::vector<double> Delay(const std::vector<double>& x, int d) {
  std::vector<double> y(x.size(), 0.0);
  for (size_t n = 0; n < x.size(); ++n) {
    const long m = static_cast<long>(n) - d;
    if (m >= 0 && m < static_cast<long>(x.size())) y[n] = x[m];
  }
  return y;
}

int PeakLag(const FeatureTensor& gcc, int f) {
  int best = 0;
  for (int b = 1; b < gcc.bins; ++b) {
    if (gcc.at(f, b, 0) > gcc.at(f, best, 0)) best = b;
  }
  return best - (gcc.bins - 1) / 2;
}

TEST(GccPhatTest, RightDelayedMeansPositiveLag) {
  const auto x = Noise(12000, 7);
  const FeatureTensor g = GccPhat(Stft(x, {}), Stft(Delay(x, 5), {}));
  EXPECT_EQ(g.bins, 65);
  for (int f = 0; f < g.frames; ++f) ASSERT_EQ(PeakLag(g, f), 5);
}

TEST(GccPhatTest, RecoversIntegerDelays) {
  const auto x = Noise(12000, 8);
  const Spectrogram ref = Stft(x, {});
  for (int d = -16; d <= 16; ++d) {
    const FeatureTensor g = GccPhat(ref, Stft(Delay(x, d), {}));
    for (int f = 1; f < g.frames; ++f) ASSERT_EQ(PeakLag(g, f), d) << d;
  }
}

TEST(GccPhatTest, IdenticalChannels) {
  const auto x = Noise(12000, 9);
  const Spectrogram s = Stft(x, {});
  const FeatureTensor g = GccPhat(s, s);
  for (int f = 0; f < g.frames; ++f) {
    ASSERT_EQ(PeakLag(g, f), 0);
    ASSERT_NEAR(g.at(f, 32, 0), 1.0, 1e-9);
  }
}

TEST(GccPhatTest, GainInvariant) {
  const auto x = Noise(12000, 10);
  std::vector<double> y = Delay(x, -3);
  for (double& v : y) v *= 7.5;
  const FeatureTensor a = GccPhat(Stft(x, {}), Stft(Delay(x, -3), {}));
  const FeatureTensor b = GccPhat(Stft(x, {}), Stft(y, {}));
  for (size_t i = 0; i < a.data.size(); ++i) ASSERT_NEAR(a.data[i], b.data[i], 1e-9);
}

TEST(GccPhatTest, IndependentNoiseHasLowPeak) {
  const FeatureTensor g = GccPhat(Stft(Noise(48000, 11), {}), Stft(Noise(48000, 12), {}));
  double mean_peak = 0.0;
  for (int f = 0; f < g.frames; ++f) {
    double peak = 0.0;
    for (int b = 0; b < g.bins; ++b) peak = std::max(peak, g.at(f, b, 0));
    mean_peak += peak / g.frames;
  }
  EXPECT_LT(mean_peak, 0.3);
}

TEST(GccPhatTest, Errors) {
  const Spectrogram a = Stft(Noise(5000, 1), {});
  const Spectrogram b = Stft(Noise(6000, 1), {});
  EXPECT_THROW(GccPhat(a, b), Error);
  EXPECT_THROW(GccPhat(a, a, 0), Error);
}

TEST(ChunkTest, Shapes) {
  EXPECT_TRUE(ChunkFeatures(FeatureTensor()).empty());
  FeatureTensor t(500, 2, 1);
  EXPECT_EQ(ChunkFeatures(t).size(), 2u);
  FeatureTensor u(248, 2, 1);
  for (double& v : u.data) v = 1.0;
  const auto chunks = ChunkFeatures(u);
  ASSERT_EQ(chunks.size(), 1u);
  EXPECT_EQ(chunks[0].at(247, 1, 0), 1.0);
  EXPECT_EQ(chunks[0].at(248, 0, 0), 0.0);
  EXPECT_EQ(chunks[0].at(249, 1, 0), 0.0);
}

TEST(PoolTest, AveragesGroups) {
  FeatureTensor t(12, 1, 1);
  for (int f = 0; f < 12; ++f) t.at(f, 0, 0) = f;
  const FeatureTensor p = PoolFrames(t, 5);
  ASSERT_EQ(p.frames, 3);
  EXPECT_EQ(p.at(0, 0, 0), 2.0);
  EXPECT_EQ(p.at(1, 0, 0), 7.0);
  EXPECT_EQ(p.at(2, 0, 0), 10.5);
}

TEST(StftConfigTest, Validate) {
  StftConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.hop_samples = 2000;
  EXPECT_THROW(cfg.Validate(), Error);
  cfg = {};
  cfg.fft_size = 512;
  EXPECT_THROW(cfg.Validate(), Error);
}

}  // namespace
}  // namespace seld
