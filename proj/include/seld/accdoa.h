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

#ifndef SELD_ACCDOA_H_
#define SELD_ACCDOA_H_

#include <cstddef>
#include <vector>

#include "seld/annotation.h"

namespace seld {

inline constexpr int kDefaultAccdoaTracks = 3;
inline constexpr double kDefaultAccdoaThreshold = 0.5;

// frames x classes x tracks x (x, y, z), row-major.
struct AccdoaGrid {
  int frames = 0;
  int classes = kNumClasses;
  int tracks = kDefaultAccdoaTracks;
  std::vector<double> data;

  AccdoaGrid() = default;
  AccdoaGrid(int frames, int classes, int tracks);

  size_t offset(int f, int c, int t) const {
    return ((static_cast<size_t>(f) * classes + c) * tracks + t) * 3;
  }
  double* vec(int f, int c, int t) { return data.data() + offset(f, c, t); }
  const double* vec(int f, int c, int t) const {
    return data.data() + offset(f, c, t);
  }
};

// Unit vectors (cos az cos el, sin az cos el, sin el) for every record, placed
// on tracks 0, 1, ... in ascending source-index order within a (frame, class).
// Throws kInvalidArgument for records outside the grid, duplicate
// (frame, class, source) records or more same-class sources than tracks.
AccdoaGrid EncodeAccdoa(const AnnotationList& annotations, int frames,
                        int tracks = kDefaultAccdoaTracks,
                        int classes = kNumClasses);

// Every slot whose vector norm exceeds `threshold` becomes a record; the track
// index becomes the source index. Output is sorted by (frame, class, source).
// Throws kInvalidArgument unless 0 < threshold < 1.
AnnotationList DecodeAccdoa(const AccdoaGrid& grid,
                            double threshold = kDefaultAccdoaThreshold);

}  // namespace seld

#endif  // SELD_ACCDOA_H_
