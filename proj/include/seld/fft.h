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

#ifndef SELD_FFT_H_
#define SELD_FFT_H_

#include <complex>
#include <memory>
#include <span>

namespace seld {

// Real-to-complex and complex-to-real transforms of a fixed size, backed by
// FFTW plans. Neither direction is normalized. Instances are not safe to use
// from several threads at once; create one per worker.
class RealFft {
 public:
  explicit RealFft(size_t size);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;
  RealFft(RealFft&&) noexcept;
  RealFft& operator=(RealFft&&) noexcept;

  size_t size() const;
  size_t num_bins() const { return size() / 2 + 1; }

  // `input` must hold size() samples, `output` num_bins() values.
  void Forward(std::span<const double> input,
               std::span<std::complex<double>> output);
  // `input` must hold num_bins() values, `output` size() samples.
  void Inverse(std::span<const std::complex<double>> input,
               std::span<double> output);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace seld

#endif  // SELD_FFT_H_
