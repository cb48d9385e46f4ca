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

#include <algorithm>
#include <cmath>
#include <string>

#include "seld/angles.h"
#include "seld/error.h"
#include "seld/fft.h"

namespace seld {

namespace {

constexpr double kIntensityEpsilon = 1e-12;
constexpr double kPhatEpsilon = 1e-12;

std::vector<double> PeriodicHann(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * i / n);
  }
  return w;
}

}  // namespace

void StftConfig::Validate() const {
  if (sample_rate_hz <= 0) ThrowInvalidArgument("sample rate must be > 0");
  if (hop_samples <= 0 || hop_samples > window_samples) {
    ThrowInvalidArgument("STFT hop must be in (0, window]");
  }
  if (fft_size < window_samples || fft_size % 2 != 0) {
    ThrowInvalidArgument("FFT size must be even and >= window");
  }
}

int StftConfig::NumFrames(size_t signal_length) const {
  if (signal_length < static_cast<size_t>(window_samples)) return 0;
  return static_cast<int>((signal_length - window_samples) / hop_samples) + 1;
}

Spectrogram::Spectrogram(int frames, int bins)
    : frames_(frames),
      bins_(bins),
      data_(static_cast<size_t>(frames) * bins) {}

FeatureTensor::FeatureTensor(int frames_in, int bins_in, int channels_in)
    : frames(frames_in),
      bins(bins_in),
      channels(channels_in),
      data(static_cast<size_t>(frames_in) * bins_in * channels_in, 0.0) {}

bool FeatureTensor::AllFinite() const {
  return std::all_of(data.begin(), data.end(),
                     [](double v) { return std::isfinite(v); });
}

Spectrogram Stft(std::span<const double> signal, const StftConfig& cfg) {
  cfg.Validate();
  const int frames = cfg.NumFrames(signal.size());
  if (frames == 0) {
    ThrowInvalidArgument("signal of " + std::to_string(signal.size()) +
                         " samples is shorter than one STFT window");
  }
  const std::vector<double> window = PeriodicHann(cfg.window_samples);
  RealFft fft(cfg.fft_size);
  Spectrogram spec(frames, cfg.num_bins());
  std::vector<double> buffer(cfg.fft_size, 0.0);
  std::vector<std::complex<double>> bins(cfg.num_bins());
  for (int f = 0; f < frames; ++f) {
    const size_t start = static_cast<size_t>(f) * cfg.hop_samples;
    for (int n = 0; n < cfg.window_samples; ++n) {
      buffer[n] = signal[start + n] * window[n];
    }
    fft.Forward(buffer, bins);
    std::copy(bins.begin(), bins.end(), &spec.at(f, 0));
  }
  return spec;
}

double MelFilterbank::HzToMel(double hz) {
  return 2595.0 * std::log10(1.0 + hz / 700.0);
}

double MelFilterbank::MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

MelFilterbank::MelFilterbank(int sample_rate_hz, int fft_size, int num_bands,
                             double min_hz, double max_hz)
    : num_bands_(num_bands), num_bins_(fft_size / 2 + 1) {
  if (max_hz < 0.0) max_hz = sample_rate_hz / 2.0;
  if (num_bands < 1 || !(min_hz >= 0.0 && min_hz < max_hz) ||
      max_hz > sample_rate_hz / 2.0) {
    ThrowInvalidArgument("invalid mel filterbank parameters");
  }
  const double mel_lo = HzToMel(min_hz);
  const double mel_hi = HzToMel(max_hz);
  std::vector<double> edges(num_bands + 2);
  for (int i = 0; i < num_bands + 2; ++i) {
    edges[i] = MelToHz(mel_lo + (mel_hi - mel_lo) * i / (num_bands + 1));
  }
  edges.front() = min_hz;
  edges.back() = max_hz;

  weights_.assign(static_cast<size_t>(num_bands) * num_bins_, 0.0);
  const double bin_hz = static_cast<double>(sample_rate_hz) / fft_size;
  for (int b = 0; b < num_bands; ++b) {
    const double lo = edges[b];
    const double centre = edges[b + 1];
    const double hi = edges[b + 2];
    double total = 0.0;
    for (int k = 0; k < num_bins_; ++k) {
      const double f = k * bin_hz;
      double w = 0.0;
      if (f <= centre) {
        w = (b == 0) ? (f >= min_hz ? 1.0 : 0.0)
                     : (f > lo ? (f - lo) / (centre - lo) : 0.0);
      } else if (f < hi) {
        w = (hi - f) / (hi - centre);
      }
      weights_[static_cast<size_t>(b) * num_bins_ + k] = w;
      total += w;
    }
    if (total <= 0.0) {
      ThrowInvalidArgument("mel band " + std::to_string(b) +
                           " covers no FFT bin; use fewer bands or a larger "
                           "FFT");
    }
    for (int k = 0; k < num_bins_; ++k) {
      weights_[static_cast<size_t>(b) * num_bins_ + k] /= total;
    }
  }
}

void MelFilterbank::Apply(std::span<const double> per_bin,
                          std::span<double> per_band) const {
  for (int b = 0; b < num_bands_; ++b) {
    const double* w = &weights_[static_cast<size_t>(b) * num_bins_];
    double acc = 0.0;
    for (int k = 0; k < num_bins_; ++k) acc += w[k] * per_bin[k];
    per_band[b] = acc;
  }
}

FeatureTensor MelPower(const Spectrogram& spec, const MelFilterbank& bank) {
  if (spec.bins() != bank.num_bins()) {
    ThrowInvalidArgument("spectrogram and filterbank bin counts differ");
  }
  FeatureTensor out(spec.frames(), bank.num_bands(), 1);
  std::vector<double> power(spec.bins());
  std::vector<double> bands(bank.num_bands());
  for (int f = 0; f < spec.frames(); ++f) {
    for (int k = 0; k < spec.bins(); ++k) power[k] = std::norm(spec.at(f, k));
    bank.Apply(power, bands);
    for (int b = 0; b < bank.num_bands(); ++b) out.at(f, b, 0) = bands[b];
  }
  return out;
}

FeatureTensor MelSpectrogram(const Spectrogram& spec,
                             const MelFilterbank& bank) {
  FeatureTensor out = MelPower(spec, bank);
  for (double& v : out.data) v = std::log(std::max(v, kLogMelFloor));
  return out;
}

FeatureTensor IntensityVectors(std::span<const Spectrogram> foa_specs,
                               const MelFilterbank& bank) {
  if (foa_specs.size() != 4) {
    ThrowInvalidArgument("intensity vectors need 4 FOA spectrograms, got " +
                         std::to_string(foa_specs.size()));
  }
  const int frames = foa_specs[0].frames();
  const int bins = foa_specs[0].bins();
  for (const auto& s : foa_specs) {
    if (s.frames() != frames || s.bins() != bins) {
      ThrowInvalidArgument("FOA spectrograms are not aligned");
    }
  }
  if (bins != bank.num_bins()) {
    ThrowInvalidArgument("spectrogram and filterbank bin counts differ");
  }
  const Spectrogram& w = foa_specs[0];
  const Spectrogram& y = foa_specs[1];
  const Spectrogram& z = foa_specs[2];
  const Spectrogram& x = foa_specs[3];
  FeatureTensor out(frames, bank.num_bands(), 3);
  std::vector<std::vector<double>> per_bin(3, std::vector<double>(bins));
  std::vector<double> bands(bank.num_bands());
  for (int f = 0; f < frames; ++f) {
    for (int k = 0; k < bins; ++k) {
      const std::complex<double> wc = std::conj(w.at(f, k));
      const double energy =
          std::norm(w.at(f, k)) +
          (std::norm(x.at(f, k)) + std::norm(y.at(f, k)) +
           std::norm(z.at(f, k))) /
              3.0 +
          kIntensityEpsilon;
      per_bin[0][k] = (wc * x.at(f, k)).real() / energy;
      per_bin[1][k] = (wc * y.at(f, k)).real() / energy;
      per_bin[2][k] = (wc * z.at(f, k)).real() / energy;
    }
    for (int c = 0; c < 3; ++c) {
      bank.Apply(per_bin[c], bands);
      for (int b = 0; b < bank.num_bands(); ++b) out.at(f, b, c) = bands[b];
    }
  }
  return out;
}

FeatureTensor GccPhat(const Spectrogram& left, const Spectrogram& right,
                      int max_lag) {
  if (left.frames() != right.frames() || left.bins() != right.bins()) {
    ThrowInvalidArgument("GCC-PHAT needs aligned spectrograms (" +
                         std::to_string(left.frames()) + " vs " +
                         std::to_string(right.frames()) + " frames)");
  }
  if (max_lag < 1) ThrowInvalidArgument("max_lag must be >= 1");
  const int bins = left.bins();
  const int n = 2 * (bins - 1);
  if (2 * max_lag + 1 > n) ThrowInvalidArgument("max_lag exceeds FFT size");
  RealFft fft(n);
  FeatureTensor out(left.frames(), 2 * max_lag + 1, 1);
  std::vector<std::complex<double>> cross(bins);
  std::vector<double> corr(n);
  for (int f = 0; f < left.frames(); ++f) {
    for (int k = 0; k < bins; ++k) {
      // R conj(L) peaks at +d when the right channel lags by d samples.
      const std::complex<double> c = right.at(f, k) * std::conj(left.at(f, k));
      cross[k] = c / (std::abs(c) + kPhatEpsilon);
    }
    fft.Inverse(cross, corr);
    for (int lag = -max_lag; lag <= max_lag; ++lag) {
      const int idx = lag >= 0 ? lag : n + lag;
      out.at(f, lag + max_lag, 0) = corr[idx] / n;
    }
  }
  return out;
}

std::vector<FeatureTensor> ChunkFeatures(const FeatureTensor& t,
                                         int chunk_frames) {
  if (chunk_frames < 1) ThrowInvalidArgument("chunk length must be >= 1");
  std::vector<FeatureTensor> chunks;
  const size_t row = static_cast<size_t>(t.bins) * t.channels;
  for (int start = 0; start < t.frames; start += chunk_frames) {
    FeatureTensor chunk(chunk_frames, t.bins, t.channels);
    const int count = std::min(chunk_frames, t.frames - start);
    std::copy_n(t.data.begin() + start * row, count * row, chunk.data.begin());
    chunks.push_back(std::move(chunk));
  }
  return chunks;
}

FeatureTensor PoolFrames(const FeatureTensor& t, int factor) {
  if (factor < 1) ThrowInvalidArgument("pooling factor must be >= 1");
  const int frames = (t.frames + factor - 1) / factor;
  FeatureTensor out(frames, t.bins, t.channels);
  const size_t row = static_cast<size_t>(t.bins) * t.channels;
  for (int f = 0; f < frames; ++f) {
    const int begin = f * factor;
    const int end = std::min(t.frames, begin + factor);
    for (size_t i = 0; i < row; ++i) {
      double acc = 0.0;
      for (int g = begin; g < end; ++g) acc += t.data[g * row + i];
      out.data[f * row + i] = acc / (end - begin);
    }
  }
  return out;
}

FeatureTensor StackChannels(std::span<const FeatureTensor> parts) {
  if (parts.empty()) return {};
  int channels = 0;
  for (const auto& p : parts) {
    if (p.frames != parts[0].frames || p.bins != parts[0].bins) {
      ThrowInvalidArgument("cannot stack tensors of different shape");
    }
    channels += p.channels;
  }
  FeatureTensor out(parts[0].frames, parts[0].bins, channels);
  for (int f = 0; f < out.frames; ++f) {
    for (int b = 0; b < out.bins; ++b) {
      int c_out = 0;
      for (const auto& p : parts) {
        for (int c = 0; c < p.channels; ++c) out.at(f, b, c_out++) = p.at(f, b, c);
      }
    }
  }
  return out;
}

}  // namespace seld
