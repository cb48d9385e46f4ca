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

#include "seld/accdoa.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "seld/angles.h"
#include "seld/error.h"

namespace seld {

AccdoaGrid::AccdoaGrid(int frames, int classes, int tracks)
    : frames(frames), classes(classes), tracks(tracks) {
  if (frames < 0 || classes < 1 || tracks < 1) {
    ThrowInvalidArgument("invalid ACCDOA grid shape");
  }
  data.assign(static_cast<size_t>(frames) * classes * tracks * 3, 0.0);
}

AccdoaGrid EncodeAccdoa(const AnnotationList& annotations, int frames,
                        int tracks, int classes) {
  AccdoaGrid grid(frames, classes, tracks);
  AnnotationList sorted = annotations;
  SortAnnotations(sorted);
  int track = 0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    const EventAnnotation& a = sorted[i];
    if (a.frame_index < 0 || a.frame_index >= frames) {
      ThrowInvalidArgument("annotation frame " + std::to_string(a.frame_index) +
                           " is outside the grid");
    }
    if (a.class_index < 0 || a.class_index >= classes) {
      ThrowInvalidArgument("annotation class " + std::to_string(a.class_index) +
                           " is outside the grid");
    }
    const bool same_cell = i > 0 && sorted[i - 1].frame_index == a.frame_index &&
                           sorted[i - 1].class_index == a.class_index;
    if (same_cell && sorted[i - 1].source_index == a.source_index) {
      ThrowInvalidArgument("duplicate record for frame " +
                           std::to_string(a.frame_index) + ", class " +
                           std::to_string(a.class_index));
    }
    track = same_cell ? track + 1 : 0;
    if (track >= tracks) {
      ThrowInvalidArgument("frame " + std::to_string(a.frame_index) +
                           ", class " + std::to_string(a.class_index) +
                           " has more sources than the " +
                           std::to_string(tracks) + " ACCDOA tracks");
    }
    double* v = grid.vec(a.frame_index, a.class_index, track);
    const double ce = CosDeg(a.elevation_deg);
    v[0] = ce * CosDeg(a.azimuth_deg);
    v[1] = ce * SinDeg(a.azimuth_deg);
    v[2] = SinDeg(a.elevation_deg);
  }
  return grid;
}

AnnotationList DecodeAccdoa(const AccdoaGrid& grid, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    ThrowInvalidArgument("ACCDOA threshold must lie in (0, 1)");
  }
  AnnotationList out;
  for (int f = 0; f < grid.frames; ++f) {
    for (int c = 0; c < grid.classes; ++c) {
      for (int t = 0; t < grid.tracks; ++t) {
        const double* v = grid.vec(f, c, t);
        const double horizontal = std::hypot(v[0], v[1]);
        if (std::hypot(horizontal, v[2]) <= threshold) continue;
        EventAnnotation a;
        a.frame_index = f;
        a.class_index = c;
        a.source_index = t;
        a.azimuth_deg =
            WrapAzimuth(std::atan2(v[1], v[0]) * kDegreesFromRadians);
        a.elevation_deg =
            v[2] == 0.0 ? 0.0
                        : std::atan2(v[2], horizontal) * kDegreesFromRadians;
        out.push_back(a);
      }
    }
  }
  return out;
}

}  // namespace seld
