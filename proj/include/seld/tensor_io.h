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

#ifndef SELD_TENSOR_IO_H_
#define SELD_TENSOR_IO_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "seld/accdoa.h"
#include "seld/dsp_features.h"

namespace seld {

// Flat binary layout, all fields little-endian:
//   8 bytes  magic "SELDTNSR"
//   uint32   version (1)
//   uint32   ndim
//   uint64   dims[ndim]
//   float32  data[prod(dims)], row-major
struct FlatTensor {
  std::vector<uint64_t> dims;
  std::vector<float> data;
};

inline constexpr char kTensorMagic[8] = {'S', 'E', 'L', 'D',
                                         'T', 'N', 'S', 'R'};
inline constexpr uint32_t kTensorVersion = 1;

void WriteTensor(const std::filesystem::path& path, const FlatTensor& tensor);
// Throws kDataError on a bad magic, version or size, kIoError if unreadable.
FlatTensor ReadTensor(const std::filesystem::path& path);

// Shape (frames, bins, channels).
FlatTensor ToFlat(const FeatureTensor& t);
// Shape (frames, classes, tracks, 3).
FlatTensor ToFlat(const AccdoaGrid& grid);
// Throws kDataError unless the tensor has 4 dims with a trailing 3.
AccdoaGrid AccdoaFromFlat(const FlatTensor& tensor);

}  // namespace seld

#endif  // SELD_TENSOR_IO_H_
