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

#include "seld/fft.h"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

#include "seld/error.h"

namespace seld {

namespace {

// FFTW's planner is not re-entrant.
std::mutex& PlannerMutex() {
  static std::mutex mutex;
  return mutex;
}

}  // namespace

struct RealFft::Impl {
  size_t size = 0;
  double* real = nullptr;
  fftw_complex* spectrum = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;

  ~Impl() {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    if (forward) fftw_destroy_plan(forward);
    if (inverse) fftw_destroy_plan(inverse);
    fftw_free(real);
    fftw_free(spectrum);
  }
};

RealFft::RealFft(size_t size) : impl_(std::make_unique<Impl>()) {
  if (size < 2 || size % 2 != 0) {
    ThrowInvalidArgument("FFT size must be even and >= 2");
  }
  impl_->size = size;
  std::lock_guard<std::mutex> lock(PlannerMutex());
  impl_->real = fftw_alloc_real(size);
  impl_->spectrum = fftw_alloc_complex(size / 2 + 1);
  const int n = static_cast<int>(size);
  impl_->forward = fftw_plan_dft_r2c_1d(n, impl_->real, impl_->spectrum,
                                        FFTW_ESTIMATE);
  impl_->inverse = fftw_plan_dft_c2r_1d(n, impl_->spectrum, impl_->real,
                                        FFTW_ESTIMATE | FFTW_DESTROY_INPUT);
}

RealFft::~RealFft() = default;
RealFft::RealFft(RealFft&&) noexcept = default;
RealFft& RealFft::operator=(RealFft&&) noexcept = default;

size_t RealFft::size() const { return impl_->size; }

void RealFft::Forward(std::span<const double> input,
                      std::span<std::complex<double>> output) {
  if (input.size() != impl_->size || output.size() != num_bins()) {
    ThrowInvalidArgument("RealFft::Forward: buffer size mismatch");
  }
  std::copy(input.begin(), input.end(), impl_->real);
  fftw_execute(impl_->forward);
  for (size_t k = 0; k < output.size(); ++k) {
    output[k] = {impl_->spectrum[k][0], impl_->spectrum[k][1]};
  }
}

void RealFft::Inverse(std::span<const std::complex<double>> input,
                      std::span<double> output) {
  if (input.size() != num_bins() || output.size() != impl_->size) {
    ThrowInvalidArgument("RealFft::Inverse: buffer size mismatch");
  }
  for (size_t k = 0; k < input.size(); ++k) {
    impl_->spectrum[k][0] = input[k].real();
    impl_->spectrum[k][1] = input[k].imag();
  }
  fftw_execute(impl_->inverse);
  std::copy(impl_->real, impl_->real + impl_->size, output.begin());
}

}  // namespace seld
