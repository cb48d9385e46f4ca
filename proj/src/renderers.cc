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

#include "seld/renderers.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "seld/angles.h"
#include "seld/error.h"
#include "seld/fft.h"

namespace seld {

namespace {

// Frequency-only terms of the head model for one FFT bin.
struct BinConstants {
  double omega = 0.0;         // rad/s
  double shadow_q2 = 0.0;     // (omega / (2 omega0))^2, omega0 = c / r
  double pinna_q2 = 0.0;      // (f / f_pinna)^2
};

BinConstants MakeBinConstants(double freq_hz,
                              const BinauralRendererConfig& cfg) {
  BinConstants k;
  k.omega = 2.0 * kPi * freq_hz;
  const double q = kPi * freq_hz * cfg.head_radius_m / cfg.speed_of_sound_mps;
  k.shadow_q2 = q * q;
  const double p = freq_hz / cfg.pinna_shelf_hz;
  k.pinna_q2 = p * p;
  return k;
}

double ShadowAlpha(double incidence_deg, const BinauralRendererConfig& cfg) {
  const double a_min = cfg.shadow_min_alpha;
  return (1.0 + a_min / 2.0) +
         (1.0 - a_min / 2.0) *
             std::cos(incidence_deg / cfg.shadow_min_angle_deg * kPi);
}

double ShelfMagnitude(double q2, double high_gain) {
  return std::sqrt((1.0 + high_gain * high_gain * q2) / (1.0 + q2));
}

// Ear responses for a horizontal direction given as (sin az, cos az).
EarPair HeadResponseFromSinCos(const BinConstants& k, double s, double c,
                               const BinauralRendererConfig& cfg) {
  const double lateral = std::asin(std::clamp(s, -1.0, 1.0));
  const double itd =
      cfg.head_radius_m / cfg.speed_of_sound_mps * (lateral + s);
  // Angle to the left ear axis (+90 deg) is acos(sin az); right is acos(-s).
  const double inc_left =
      std::acos(std::clamp(s, -1.0, 1.0)) * kDegreesFromRadians;
  const double inc_right =
      std::acos(std::clamp(-s, -1.0, 1.0)) * kDegreesFromRadians;
  const double rear = 0.5 * (1.0 - c);
  const double pinna_gain =
      std::pow(10.0, cfg.pinna_rear_gain_db * rear / 20.0);
  const double pinna = ShelfMagnitude(k.pinna_q2, pinna_gain);
  const double mag_left =
      pinna * ShelfMagnitude(k.shadow_q2, ShadowAlpha(inc_left, cfg));
  const double mag_right =
      pinna * ShelfMagnitude(k.shadow_q2, ShadowAlpha(inc_right, cfg));
  const double half_phase = 0.5 * k.omega * itd;
  return {std::polar(mag_left, half_phase), std::polar(mag_right, -half_phase)};
}

// Mode-matching decoder for a horizontal ring: pseudo-inverse of the
// re-encoding matrix with rows (1, cos, sin). Returns per speaker the gains
// applied to (W, X, Y).
std::vector<std::array<double, 3>> RingDecoder(
    const std::vector<double>& azimuths_deg) {
  const size_t m = azimuths_deg.size();
  double g[3][3] = {};
  std::vector<std::array<double, 3>> enc(m);
  for (size_t i = 0; i < m; ++i) {
    enc[i] = {1.0, CosDeg(azimuths_deg[i]), SinDeg(azimuths_deg[i])};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) g[r][c] += enc[i][r] * enc[i][c];
    }
  }
  const double det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                     g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                     g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  if (std::fabs(det) < 1e-9) {
    ThrowInvalidArgument("virtual speaker layout cannot decode first order");
  }
  double inv[3][3];
  inv[0][0] = (g[1][1] * g[2][2] - g[1][2] * g[2][1]) / det;
  inv[0][1] = (g[0][2] * g[2][1] - g[0][1] * g[2][2]) / det;
  inv[0][2] = (g[0][1] * g[1][2] - g[0][2] * g[1][1]) / det;
  inv[1][0] = (g[1][2] * g[2][0] - g[1][0] * g[2][2]) / det;
  inv[1][1] = (g[0][0] * g[2][2] - g[0][2] * g[2][0]) / det;
  inv[1][2] = (g[0][2] * g[1][0] - g[0][0] * g[1][2]) / det;
  inv[2][0] = (g[1][0] * g[2][1] - g[1][1] * g[2][0]) / det;
  inv[2][1] = (g[0][1] * g[2][0] - g[0][0] * g[2][1]) / det;
  inv[2][2] = (g[0][0] * g[1][1] - g[0][1] * g[1][0]) / det;
  std::vector<std::array<double, 3>> dec(m);
  for (size_t i = 0; i < m; ++i) {
    for (int c = 0; c < 3; ++c) {
      dec[i][c] = enc[i][0] * inv[0][c] + enc[i][1] * inv[1][c] +
                  enc[i][2] * inv[2][c];
    }
  }
  return dec;
}

}  // namespace

void BinauralRendererConfig::Validate() const {
  if (!(head_radius_m > 0.0)) ThrowInvalidArgument("head radius must be > 0");
  if (!(speed_of_sound_mps > 0.0)) {
    ThrowInvalidArgument("speed of sound must be > 0");
  }
  if (virtual_speaker_azimuths_deg.size() < 4) {
    ThrowInvalidArgument("binaural renderer needs at least 4 virtual speakers");
  }
  std::vector<double> wrapped;
  for (double az : virtual_speaker_azimuths_deg) {
    wrapped.push_back(WrapAzimuth(az));
  }
  std::sort(wrapped.begin(), wrapped.end());
  if (std::adjacent_find(wrapped.begin(), wrapped.end()) != wrapped.end()) {
    ThrowInvalidArgument("virtual speaker azimuths must be distinct");
  }
  if (!(shadow_min_alpha > 0.0 && shadow_min_alpha <= 1.0)) {
    ThrowInvalidArgument("shadow_min_alpha must be in (0, 1]");
  }
  if (!(shadow_min_angle_deg > 90.0 && shadow_min_angle_deg <= 180.0)) {
    ThrowInvalidArgument("shadow_min_angle_deg must be in (90, 180]");
  }
  if (!(pinna_shelf_hz > 0.0)) ThrowInvalidArgument("pinna_shelf_hz must be > 0");
  if (frame_samples < 64 || frame_samples % 2 != 0) {
    ThrowInvalidArgument("binaural frame must be even and >= 64 samples");
  }
  if (!(diffuseness_smoothing >= 0.0 && diffuseness_smoothing < 1.0)) {
    ThrowInvalidArgument("diffuseness_smoothing must be in [0, 1)");
  }
}

StereoBuffer FoaToStereo(const FoaBuffer& foa) {
  StereoBuffer out;
  out.sample_rate_hz = foa.sample_rate_hz();
  const auto w = foa.channel(kW);
  const auto y = foa.channel(kY);
  out.left.resize(w.size());
  out.right.resize(w.size());
  for (size_t n = 0; n < w.size(); ++n) {
    out.left[n] = w[n] + y[n];
    out.right[n] = w[n] - y[n];
  }
  return out;
}

double WoodworthItdSeconds(double azimuth_deg, double head_radius_m,
                           double speed_of_sound_mps) {
  const double s = SinDeg(azimuth_deg);
  return head_radius_m / speed_of_sound_mps * (std::asin(s) + s);
}

double InvertWoodworthDegrees(double itd_seconds, double head_radius_m,
                              double speed_of_sound_mps) {
  const double target = std::fabs(itd_seconds) * speed_of_sound_mps /
                        head_radius_m;
  const double sign = itd_seconds < 0.0 ? -1.0 : 1.0;
  if (target == 0.0) return 0.0;
  if (target >= kPi / 2.0 + 1.0) return sign * 90.0;
  // theta + sin(theta) is strictly increasing on [0, pi/2].
  double lo = 0.0;
  double hi = kPi / 2.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid + std::sin(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return sign * 0.5 * (lo + hi) * kDegreesFromRadians;
}

double HeadShadowMagnitude(double freq_hz, double incidence_deg,
                           const BinauralRendererConfig& cfg) {
  const BinConstants k = MakeBinConstants(freq_hz, cfg);
  return ShelfMagnitude(k.shadow_q2, ShadowAlpha(incidence_deg, cfg));
}

double PinnaMagnitude(double freq_hz, double azimuth_deg,
                      const BinauralRendererConfig& cfg) {
  const BinConstants k = MakeBinConstants(freq_hz, cfg);
  const double rear = 0.5 * (1.0 - CosDeg(azimuth_deg));
  return ShelfMagnitude(k.pinna_q2,
                        std::pow(10.0, cfg.pinna_rear_gain_db * rear / 20.0));
}

EarPair SphericalHeadResponse(double freq_hz, double azimuth_deg,
                              const BinauralRendererConfig& cfg) {
  return HeadResponseFromSinCos(MakeBinConstants(freq_hz, cfg),
                                SinDeg(azimuth_deg), CosDeg(azimuth_deg), cfg);
}

StereoBuffer FoaToBinaural(const FoaBuffer& foa,
                           const BinauralRendererConfig& cfg) {
  cfg.Validate();
  const int fs = foa.sample_rate_hz();
  const int frame = cfg.frame_samples;
  const int hop = frame / 2;
  const int nfft = 2 * frame;
  const int bins = nfft / 2 + 1;
  // Constant delay that keeps the zero-phase shelves and the +-ITD/2 shifts
  // causal inside each zero-padded block; removed again at the end.
  const int latency = frame / 2;
  const size_t length = foa.num_samples();

  StereoBuffer out;
  out.sample_rate_hz = fs;
  out.left.assign(length, 0.0);
  out.right.assign(length, 0.0);
  if (length == 0) return out;

  std::vector<BinConstants> consts(bins);
  std::vector<std::complex<double>> latency_phase(bins);
  for (int k = 0; k < bins; ++k) {
    const double f = static_cast<double>(k) * fs / nfft;
    consts[k] = MakeBinConstants(f, cfg);
    latency_phase[k] = std::polar(1.0, -consts[k].omega * latency / fs);
  }

  const auto& speakers = cfg.virtual_speaker_azimuths_deg;
  const auto decoder = RingDecoder(speakers);
  const size_t num_speakers = speakers.size();
  std::vector<EarPair> speaker_response(num_speakers * bins);
  for (size_t m = 0; m < num_speakers; ++m) {
    const double s = SinDeg(speakers[m]);
    const double c = CosDeg(speakers[m]);
    for (int k = 0; k < bins; ++k) {
      speaker_response[m * bins + k] = HeadResponseFromSinCos(consts[k], s, c, cfg);
    }
  }

  std::vector<double> window(frame);
  for (int n = 0; n < frame; ++n) {
    window[n] = 0.5 - 0.5 * std::cos(2.0 * kPi * n / frame);
  }

  RealFft fft(nfft);
  std::array<std::vector<double>, 4> block;
  std::array<std::vector<std::complex<double>>, 4> spec;
  for (int c = 0; c < 4; ++c) {
    block[c].assign(nfft, 0.0);
    spec[c].assign(bins, 0.0);
  }
  std::vector<std::complex<double>> left_spec(bins);
  std::vector<std::complex<double>> right_spec(bins);
  std::vector<double> left_block(nfft);
  std::vector<double> right_block(nfft);

  // Smoothed intensity (x, y, z) and energy per bin.
  std::vector<std::array<double, 4>> smoothed(bins, {0.0, 0.0, 0.0, 0.0});
  const double beta = cfg.diffuseness_smoothing;

  // Accumulators are offset by `frame` so blocks starting before sample 0
  // can be added without bounds juggling.
  const size_t acc_len = length + 3 * static_cast<size_t>(frame) + nfft;
  std::vector<double> acc_left(acc_len, 0.0);
  std::vector<double> acc_right(acc_len, 0.0);

  const bool parametric = cfg.method == BinauralMethod::kParametric;
  const long first_start = -static_cast<long>(hop);
  for (long start = first_start; start < static_cast<long>(length);
       start += hop) {
    for (int c = 0; c < 4; ++c) {
      const auto x = foa.channel(c);
      std::fill(block[c].begin(), block[c].end(), 0.0);
      for (int n = 0; n < frame; ++n) {
        const long idx = start + n;
        if (idx >= 0 && idx < static_cast<long>(length)) {
          block[c][n] = x[idx] * window[n];
        }
      }
      fft.Forward(block[c], spec[c]);
    }
    const auto& w = spec[kW];
    const auto& y = spec[kY];
    const auto& z = spec[kZ];
    const auto& x = spec[kX];
    for (int k = 0; k < bins; ++k) {
      double diffuse_gain = 1.0;
      std::complex<double> l(0.0, 0.0);
      std::complex<double> r(0.0, 0.0);
      if (parametric) {
        const std::complex<double> wc = std::conj(w[k]);
        const double ix = (wc * x[k]).real();
        const double iy = (wc * y[k]).real();
        const double iz = (wc * z[k]).real();
        const double e = 0.5 * (std::norm(w[k]) + std::norm(x[k]) +
                                std::norm(y[k]) + std::norm(z[k]));
        auto& sm = smoothed[k];
        sm[0] = beta * sm[0] + (1.0 - beta) * ix;
        sm[1] = beta * sm[1] + (1.0 - beta) * iy;
        sm[2] = beta * sm[2] + (1.0 - beta) * iz;
        sm[3] = beta * sm[3] + (1.0 - beta) * e;
        const double horiz = std::hypot(sm[0], sm[1]);
        const double norm = std::sqrt(horiz * horiz + sm[2] * sm[2]);
        double psi = sm[3] > 0.0 ? 1.0 - norm / sm[3] : 1.0;
        psi = std::clamp(psi, 0.0, 1.0);
        double s = 0.0;
        double co = 1.0;
        if (horiz > 0.0) {
          s = sm[1] / horiz;
          co = sm[0] / horiz;
        }
        const EarPair direct = HeadResponseFromSinCos(consts[k], s, co, cfg);
        const std::complex<double> d = std::sqrt(1.0 - psi) * w[k];
        l = d * direct.left;
        r = d * direct.right;
        diffuse_gain = std::sqrt(psi);
      }
      if (diffuse_gain > 0.0) {
        for (size_t m = 0; m < num_speakers; ++m) {
          const auto& g = decoder[m];
          const std::complex<double> sp =
              diffuse_gain * (g[0] * w[k] + g[1] * x[k] + g[2] * y[k]);
          const EarPair& h = speaker_response[m * bins + k];
          l += sp * h.left;
          r += sp * h.right;
        }
      }
      left_spec[k] = l * latency_phase[k];
      right_spec[k] = r * latency_phase[k];
    }
    fft.Inverse(left_spec, left_block);
    fft.Inverse(right_spec, right_block);
    const size_t base = static_cast<size_t>(start + frame);
    for (int n = 0; n < nfft; ++n) {
      acc_left[base + n] += left_block[n] / nfft;
      acc_right[base + n] += right_block[n] / nfft;
    }
  }
  for (size_t n = 0; n < length; ++n) {
    out.left[n] = acc_left[n + frame + latency];
    out.right[n] = acc_right[n + frame + latency];
  }
  return out;
}

}  // namespace seld
