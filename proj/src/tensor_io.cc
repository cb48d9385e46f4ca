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

#include "seld/tensor_io.h"

#include <bit>
#include <cstring>
#include <fstream>

#include "seld/error.h"

namespace seld {

static_assert(std::endian::native == std::endian::little,
              "tensor files are written in host byte order");

namespace {

template <typename T>
void Put(std::ofstream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T Get(std::ifstream& in, const std::filesystem::path& path) {
  T value{};
  if (!in.read(reinterpret_cast<char*>(&value), sizeof(T))) {
    ThrowDataError(path.string() + ": truncated tensor file");
  }
  return value;
}

}  // namespace

void WriteTensor(const std::filesystem::path& path, const FlatTensor& tensor) {
  uint64_t count = 1;
  for (uint64_t d : tensor.dims) count *= d;
  if (count != tensor.data.size()) {
    ThrowInvalidArgument("tensor data does not match its shape");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) ThrowIoError("cannot open " + path.string() + " for writing");
  out.write(kTensorMagic, sizeof(kTensorMagic));
  Put<uint32_t>(out, kTensorVersion);
  Put<uint32_t>(out, static_cast<uint32_t>(tensor.dims.size()));
  for (uint64_t d : tensor.dims) Put<uint64_t>(out, d);
  out.write(reinterpret_cast<const char*>(tensor.data.data()),
            static_cast<std::streamsize>(tensor.data.size() * sizeof(float)));
  if (!out) ThrowIoError("failed writing " + path.string());
}

FlatTensor ReadTensor(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ThrowIoError("cannot open " + path.string());
  char magic[8];
  if (!in.read(magic, sizeof(magic)) ||
      std::memcmp(magic, kTensorMagic, sizeof(magic)) != 0) {
    ThrowDataError(path.string() + ": not a tensor file");
  }
  if (Get<uint32_t>(in, path) != kTensorVersion) {
    ThrowDataError(path.string() + ": unsupported tensor version");
  }
  const uint32_t ndim = Get<uint32_t>(in, path);
  if (ndim > 16) ThrowDataError(path.string() + ": too many dimensions");
  FlatTensor t;
  uint64_t count = 1;
  for (uint32_t i = 0; i < ndim; ++i) {
    t.dims.push_back(Get<uint64_t>(in, path));
    count *= t.dims.back();
  }
  t.data.resize(count);
  if (!in.read(reinterpret_cast<char*>(t.data.data()),
               static_cast<std::streamsize>(count * sizeof(float)))) {
    ThrowDataError(path.string() + ": truncated tensor data");
  }
  return t;
}

FlatTensor ToFlat(const FeatureTensor& t) {
  FlatTensor out;
  out.dims = {static_cast<uint64_t>(t.frames), static_cast<uint64_t>(t.bins),
              static_cast<uint64_t>(t.channels)};
  out.data.assign(t.data.begin(), t.data.end());
  return out;
}

FlatTensor ToFlat(const AccdoaGrid& grid) {
  FlatTensor out;
  out.dims = {static_cast<uint64_t>(grid.frames),
              static_cast<uint64_t>(grid.classes),
              static_cast<uint64_t>(grid.tracks), 3};
  out.data.assign(grid.data.begin(), grid.data.end());
  return out;
}

AccdoaGrid AccdoaFromFlat(const FlatTensor& tensor) {
  if (tensor.dims.size() != 4 || tensor.dims[3] != 3) {
    ThrowDataError("tensor is not an ACCDOA grid");
  }
  AccdoaGrid grid(static_cast<int>(tensor.dims[0]),
                  static_cast<int>(tensor.dims[1]),
                  static_cast<int>(tensor.dims[2]));
  grid.data.assign(tensor.data.begin(), tensor.data.end());
  return grid;
}

}  // namespace seld
