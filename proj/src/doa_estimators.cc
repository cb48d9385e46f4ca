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

#include "seld/doa_estimators.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "seld/angles.h"
#include "seld/error.h"

namespace seld {

namespace {

constexpr double kEnergyFloor = 1e-30;

// Expected high/low band tilt (dB) of the head model for a flat source, on a
// 1 degree azimuth grid.
class TiltTable {
 public:
  TiltTable(const TwoChannelGeometry& geometry, const StftConfig& stft,
            const SpectralCueBands& bands) {
    BinauralRendererConfig head = geometry.head_model;
    head.head_radius_m = geometry.separation_m / 2.0;
    head.speed_of_sound_mps = geometry.speed_of_sound_mps;
    const double bin_hz = static_cast<double>(stft.sample_rate_hz) / stft.fft_size;
    for (int i = 0; i < 361; ++i) {
      const double az = -180.0 + i;
      double lo = 0.0;
      double hi = 0.0;
      for (int k = 0; k < stft.num_bins(); ++k) {
        const double f = k * bin_hz;
        const bool in_lo = f >= bands.low_min_hz && f < bands.low_max_hz;
        const bool in_hi = f >= bands.high_min_hz && f < bands.high_max_hz;
        if (!in_lo && !in_hi) continue;
        const EarPair h = SphericalHeadResponse(f, az, head);
        const double p = std::norm(h.left) + std::norm(h.right);
        (in_lo ? lo : hi) += p;
      }
      tilt_db_[i] = 10.0 * std::log10(std::max(hi, kEnergyFloor) /
                                      std::max(lo, kEnergyFloor));
    }
  }

  double at(double azimuth_deg) const {
    const double pos = WrapAzimuth(azimuth_deg) + 180.0;
    const int i = std::clamp(static_cast<int>(pos), 0, 359);
    const double u = pos - i;
    return (1.0 - u) * tilt_db_[i] + u * tilt_db_[i + 1];
  }

 private:
  std::array<double, 361> tilt_db_{};
};

}  // namespace

void TwoChannelGeometry::Validate() const {
  if (!(separation_m > 0.0)) ThrowInvalidArgument("separation must be > 0");
  if (!(speed_of_sound_mps > 0.0)) {
    ThrowInvalidArgument("speed of sound must be > 0");
  }
  if (sample_rate_hz <= 0) ThrowInvalidArgument("sample rate must be > 0");
}

double StereoSeparationForLag(int max_lag, int sample_rate_hz,
                              double speed_of_sound_mps) {
  return max_lag * speed_of_sound_mps / sample_rate_hz;
}

std::vector<DoaEstimate> DoaFoaIntensity(const FeatureTensor& intensity,
                                         const FeatureTensor& band_power) {
  if (intensity.channels != 3) {
    ThrowInvalidArgument("intensity tensor must have 3 channels");
  }
  const bool weighted = !band_power.empty();
  if (weighted && (band_power.frames != intensity.frames ||
                   band_power.bins != intensity.bins)) {
    ThrowInvalidArgument("band power does not match the intensity tensor");
  }
  std::vector<DoaEstimate> out;
  out.reserve(intensity.frames);
  for (int f = 0; f < intensity.frames; ++f) {
    double wsum = 0.0;
    double vx = 0.0;
    double vy = 0.0;
    for (int b = 0; b < intensity.bins; ++b) {
      const double w = weighted ? band_power.at(f, b, 0) : 1.0;
      wsum += w;
      vx += w * intensity.at(f, b, 0);
      vy += w * intensity.at(f, b, 1);
    }
    DoaEstimate e;
    e.frame_index = f;
    if (wsum > 0.0) {
      vx /= wsum;
      vy /= wsum;
      e.azimuth_deg = WrapAzimuth(std::atan2(vy, vx) * kDegreesFromRadians);
      e.confidence =
          std::clamp(std::hypot(vx, vy) / kPlaneWaveIntensity, 0.0, 1.0);
    }
    out.push_back(e);
  }
  return out;
}

TwoChannelCues ComputeTwoChannelCues(const Spectrogram& left,
                                     const Spectrogram& right,
                                     const StftConfig& stft, int max_lag,
                                     const SpectralCueBands& bands) {
  TwoChannelCues cues;
  cues.gcc = GccPhat(left, right, max_lag);
  cues.max_lag = max_lag;
  const double bin_hz = static_cast<double>(stft.sample_rate_hz) / stft.fft_size;
  const int frames = left.frames();
  cues.energy_left.assign(frames, 0.0);
  cues.energy_right.assign(frames, 0.0);
  cues.low_band_energy.assign(frames, 0.0);
  cues.high_band_energy.assign(frames, 0.0);
  for (int f = 0; f < frames; ++f) {
    for (int k = 0; k < left.bins(); ++k) {
      const double pl = std::norm(left.at(f, k));
      const double pr = std::norm(right.at(f, k));
      cues.energy_left[f] += pl;
      cues.energy_right[f] += pr;
      const double hz = k * bin_hz;
      if (hz >= bands.low_min_hz && hz < bands.low_max_hz) {
        cues.low_band_energy[f] += pl + pr;
      } else if (hz >= bands.high_min_hz && hz < bands.high_max_hz) {
        cues.high_band_energy[f] += pl + pr;
      }
    }
  }
  return cues;
}

TwoChannelCues PoolCues(const TwoChannelCues& cues, int factor) {
  TwoChannelCues out;
  out.max_lag = cues.max_lag;
  out.gcc = PoolFrames(cues.gcc, factor);
  auto pool = [factor](const std::vector<double>& v) {
    std::vector<double> r((v.size() + factor - 1) / factor, 0.0);
    for (size_t i = 0; i < r.size(); ++i) {
      const size_t begin = i * factor;
      const size_t end = std::min(v.size(), begin + factor);
      for (size_t j = begin; j < end; ++j) r[i] += v[j];
      r[i] /= static_cast<double>(end - begin);
    }
    return r;
  };
  out.energy_left = pool(cues.energy_left);
  out.energy_right = pool(cues.energy_right);
  out.low_band_energy = pool(cues.low_band_energy);
  out.high_band_energy = pool(cues.high_band_energy);
  return out;
}

std::vector<DoaEstimate> DoaTwoChannelTdoa(const TwoChannelCues& cues,
                                           const TwoChannelGeometry& geometry,
                                           const StftConfig& stft,
                                           const SpectralCueBands& bands) {
  geometry.Validate();
  const bool binaural = geometry.mode == TwoChannelMode::kBinaural;
  const int lags = cues.gcc.bins;
  const int max_lag = (lags - 1) / 2;
  std::optional<TiltTable> tilt;
  if (binaural) tilt.emplace(geometry, stft, bands);

  std::vector<DoaEstimate> out;
  out.reserve(cues.frames());
  for (int f = 0; f < cues.frames(); ++f) {
    int best = 0;
    for (int b = 1; b < lags; ++b) {
      if (cues.gcc.at(f, b, 0) > cues.gcc.at(f, best, 0)) best = b;
    }
    double peak = cues.gcc.at(f, best, 0);
    // One silent channel leaves the whitened correlation undefined; a
    // coincident pair still places the source at the louder side.
    const double louder = std::max(cues.energy_left[f], cues.energy_right[f]);
    const double quieter = std::min(cues.energy_left[f], cues.energy_right[f]);
    if (!binaural && louder > 0.0 && quieter <= 1e-12 * louder) {
      best = max_lag;
      peak = 1.0;
    }
    double lag = best - max_lag;
    if (geometry.subsample_peak && best > 0 && best < lags - 1) {
      const double ym = cues.gcc.at(f, best - 1, 0);
      const double yp = cues.gcc.at(f, best + 1, 0);
      const double denom = ym - 2.0 * peak + yp;
      if (denom < 0.0) lag += std::clamp(0.5 * (ym - yp) / denom, -0.5, 0.5);
    }
    const double tau = lag / geometry.sample_rate_hz;

    double lateral = 0.0;
    if (binaural) {
      lateral = InvertWoodworthDegrees(tau, geometry.separation_m / 2.0,
                                       geometry.speed_of_sound_mps);
    } else if (best == max_lag) {
      const double l = std::sqrt(cues.energy_left[f]);
      const double r = std::sqrt(cues.energy_right[f]);
      if (l + r > 0.0) {
        lateral = std::asin(std::clamp((l - r) / (l + r), -1.0, 1.0)) *
                  kDegreesFromRadians;
      }
    } else {
      const double s = geometry.speed_of_sound_mps * tau / geometry.separation_m;
      lateral = std::asin(std::clamp(s, -1.0, 1.0)) * kDegreesFromRadians;
    }

    DoaEstimate e;
    e.frame_index = f;
    e.azimuth_deg = WrapAzimuth(lateral);
    e.confidence = std::clamp(peak, 0.0, 1.0);
    e.alternate_azimuth_deg = WrapAzimuth(180.0 - lateral);
    if (binaural && cues.low_band_energy[f] > 0.0 &&
        cues.high_band_energy[f] > 0.0) {
      const double measured = 10.0 * std::log10(cues.high_band_energy[f] /
                                                cues.low_band_energy[f]);
      const double front = tilt->at(e.azimuth_deg);
      const double back = tilt->at(*e.alternate_azimuth_deg);
      e.rear_evidence_db =
          std::fabs(measured - front) - std::fabs(measured - back);
    }
    out.push_back(e);
  }
  return out;
}

AmbiguityPolicy ParseAmbiguityPolicy(const std::string& name) {
  if (name == "front") return AmbiguityPolicy::kFront;
  if (name == "alternate") return AmbiguityPolicy::kAlternate;
  if (name == "random") return AmbiguityPolicy::kRandom;
  if (name == "spectral") return AmbiguityPolicy::kSpectralCue;
  ThrowInvalidArgument("unknown ambiguity policy '" + name +
                       "' (expected front, alternate, random or spectral)");
}

std::string AmbiguityPolicyName(AmbiguityPolicy policy) {
  switch (policy) {
    case AmbiguityPolicy::kFront:
      return "front";
    case AmbiguityPolicy::kAlternate:
      return "alternate";
    case AmbiguityPolicy::kRandom:
      return "random";
    case AmbiguityPolicy::kSpectralCue:
      return "spectral";
  }
  return "front";
}

AnnotationList EstimatesToEvents(const std::vector<DoaEstimate>& estimates,
                                 int class_hint,
                                 const EventConversionConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::bernoulli_distribution coin(0.5);
  AnnotationList out;
  for (const DoaEstimate& e : estimates) {
    // Draw for every frame so the stream does not depend on confidences.
    const bool flip = coin(rng);
    if (e.confidence < cfg.confidence_threshold) continue;
    double az = e.azimuth_deg;
    if (e.alternate_azimuth_deg) {
      switch (cfg.policy) {
        case AmbiguityPolicy::kFront:
          break;
        case AmbiguityPolicy::kAlternate:
          az = *e.alternate_azimuth_deg;
          break;
        case AmbiguityPolicy::kRandom:
          if (flip) az = *e.alternate_azimuth_deg;
          break;
        case AmbiguityPolicy::kSpectralCue:
          if (e.rear_evidence_db > 0.0) az = *e.alternate_azimuth_deg;
          break;
      }
    }
    out.push_back({e.frame_index, class_hint, 0, WrapAzimuth(az), 0.0});
  }
  return out;
}

std::vector<DoaEstimate> EstimateFromFoa(const FoaBuffer& foa,
                                         const StftConfig& stft) {
  if (foa.sample_rate_hz() != stft.sample_rate_hz) {
    ThrowInvalidArgument("FOA sample rate " +
                         std::to_string(foa.sample_rate_hz()) +
                         " does not match the STFT rate " +
                         std::to_string(stft.sample_rate_hz));
  }
  std::vector<Spectrogram> specs;
  for (int c = 0; c < kNumFoaChannels; ++c) {
    specs.push_back(Stft(foa.channel(c), stft));
  }
  const MelFilterbank bank(stft.sample_rate_hz, stft.fft_size, kNumMelBands);
  const FeatureTensor iv = PoolFrames(IntensityVectors(specs, bank));
  const FeatureTensor power = PoolFrames(MelPower(specs[kW], bank));
  return DoaFoaIntensity(iv, power);
}

std::vector<DoaEstimate> EstimateFromTwoChannel(
    const StereoBuffer& audio, const TwoChannelGeometry& geometry,
    const StftConfig& stft, int max_lag) {
  if (audio.sample_rate_hz != stft.sample_rate_hz ||
      geometry.sample_rate_hz != stft.sample_rate_hz) {
    ThrowInvalidArgument("two-channel sample rate does not match the STFT rate");
  }
  const Spectrogram left = Stft(audio.left, stft);
  const Spectrogram right = Stft(audio.right, stft);
  const TwoChannelCues cues =
      PoolCues(ComputeTwoChannelCues(left, right, stft, max_lag));
  return DoaTwoChannelTdoa(cues, geometry, stft);
}

}  // namespace seld
