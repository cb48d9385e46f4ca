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

#ifndef SELD_DSP_FEATURES_H_
#define SELD_DSP_FEATURES_H_

#include <complex>
#include <span>
#include <vector>

namespace seld {

struct StftConfig {
  int sample_rate_hz = 24000;
  int window_samples = 1024;
  int hop_samples = 480;
  int fft_size = 1024;

  // Throws kInvalidArgument unless 0 < hop <= window <= fft_size and the FFT
  // size is even.
  void Validate() const;
  int num_bins() const { return fft_size / 2 + 1; }
  // floor((length - window) / hop) + 1, or 0 when the signal is too short.
  int NumFrames(size_t signal_length) const;
};

// Complex STFT, frames x bins, row-major.
class Spectrogram {
 public:
  Spectrogram() = default;
  Spectrogram(int frames, int bins);

  int frames() const { return frames_; }
  int bins() const { return bins_; }
  std::complex<double>& at(int frame, int bin) {
    return data_[static_cast<size_t>(frame) * bins_ + bin];
  }
  const std::complex<double>& at(int frame, int bin) const {
    return data_[static_cast<size_t>(frame) * bins_ + bin];
  }
  std::span<const std::complex<double>> frame(int f) const {
    return {data_.data() + static_cast<size_t>(f) * bins_,
            static_cast<size_t>(bins_)};
  }

 private:
  int frames_ = 0;
  int bins_ = 0;
  std::vector<std::complex<double>> data_;
};

// Dense frames x bins x channels tensor, row-major.
struct FeatureTensor {
  int frames = 0;
  int bins = 0;
  int channels = 0;
  std::vector<double> data;

  FeatureTensor() = default;
  FeatureTensor(int frames, int bins, int channels);

  double& at(int f, int b, int c) {
    return data[(static_cast<size_t>(f) * bins + b) * channels + c];
  }
  double at(int f, int b, int c) const {
    return data[(static_cast<size_t>(f) * bins + b) * channels + c];
  }
  bool empty() const { return frames == 0; }
  bool AllFinite() const;
};

// Hann-windowed (periodic), unnormalized forward STFT. Throws
// kInvalidArgument when the signal is shorter than one window.
Spectrogram Stft(std::span<const double> signal, const StftConfig& cfg);

// Triangular filters on the HTK mel scale (mel = 2595 log10(1 + f / 700)),
// equally spaced between min_hz and max_hz. Each filter is normalized to unit
// total weight. The lowest filter keeps full weight below its centre so the DC
// bin is covered.
class MelFilterbank {
 public:
  MelFilterbank(int sample_rate_hz, int fft_size, int num_bands = 64,
                double min_hz = 0.0, double max_hz = -1.0);

  int num_bands() const { return num_bands_; }
  int num_bins() const { return num_bins_; }
  double weight(int band, int bin) const {
    return weights_[static_cast<size_t>(band) * num_bins_ + bin];
  }
  // Projects per-bin values (power, intensity component, ...) onto the bands.
  void Apply(std::span<const double> per_bin, std::span<double> per_band) const;

  static double HzToMel(double hz);
  static double MelToHz(double mel);

 private:
  int num_bands_;
  int num_bins_;
  std::vector<double> weights_;
};

inline constexpr double kLogMelFloor = 1e-10;
inline constexpr int kNumMelBands = 64;

// Linear mel-band power, frames x bands x 1.
FeatureTensor MelPower(const Spectrogram& spec, const MelFilterbank& bank);
// log(max(mel power, 1e-10)), frames x bands x 1.
FeatureTensor MelSpectrogram(const Spectrogram& spec,
                             const MelFilterbank& bank);

// Per time-frequency bin I = Re{conj(W) (X, Y, Z)} divided by
// |W|^2 + (|X|^2 + |Y|^2 + |Z|^2) / 3 + eps, then averaged into the mel bands
// with the filterbank weights. Output is frames x bands x 3 with channels
// (x, y, z). For an SN3D plane wave the vector length is 3/4.
// Throws kInvalidArgument unless four aligned spectrograms are given in ACN
// order (W, Y, Z, X).
FeatureTensor IntensityVectors(std::span<const Spectrogram> foa_specs,
                               const MelFilterbank& bank);

// Length of an intensity vector produced by a single SN3D plane wave.
inline constexpr double kPlaneWaveIntensity = 0.75;

// Phase-transform cross-correlation per frame, cropped to lags
// [-max_lag, max_lag]. Bin b of the output holds lag b - max_lag. A positive
// lag means the left channel leads (the right channel is a delayed copy).
// Throws kInvalidArgument on mismatched shapes or max_lag < 1.
FeatureTensor GccPhat(const Spectrogram& left, const Spectrogram& right,
                      int max_lag = 32);

inline constexpr int kChunkFrames = 250;
inline constexpr int kLabelPoolFactor = 5;

// Splits along time into chunks of `chunk_frames`, zero-padding the tail.
std::vector<FeatureTensor> ChunkFeatures(const FeatureTensor& t,
                                         int chunk_frames = kChunkFrames);

// Averages groups of `factor` consecutive frames (the last group may be
// shorter). Maps the 20 ms STFT grid onto the 100 ms label grid for factor 5.
FeatureTensor PoolFrames(const FeatureTensor& t,
                         int factor = kLabelPoolFactor);

// Concatenates tensors with identical frames and bins along the channel axis.
FeatureTensor StackChannels(std::span<const FeatureTensor> parts);

}  // namespace seld

#endif  // SELD_DSP_FEATURES_H_
