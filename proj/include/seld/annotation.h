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

#ifndef SELD_ANNOTATION_H_
#define SELD_ANNOTATION_H_

#include <compare>
#include <vector>

namespace seld {

// Label frames are 100 ms long.
inline constexpr double kLabelFrameSeconds = 0.1;

// Number of sound event classes in the label space.
inline constexpr int kNumClasses = 13;

// Azimuth increases counterclockwise (0 = front, +90 = left); elevation is
// positive upwards.
struct Direction {
  double azimuth_deg = 0.0;
  double elevation_deg = 0.0;

  // Throws kInvalidArgument unless azimuth is in [-180, 180] and elevation in
  // [-90, 90].
  void Validate() const;

  friend bool operator==(const Direction&, const Direction&) = default;
};

// One active (frame, class, source) record on the 100 ms label grid.
struct EventAnnotation {
  int frame_index = 0;
  int class_index = 0;
  int source_index = 0;
  double azimuth_deg = 0.0;
  double elevation_deg = 0.0;

  Direction direction() const { return {azimuth_deg, elevation_deg}; }

  friend bool operator==(const EventAnnotation&,
                         const EventAnnotation&) = default;
};

using AnnotationList = std::vector<EventAnnotation>;

// Sorts by (frame, class, source) in place.
void SortAnnotations(AnnotationList& annotations);

// Number of label frames needed to cover `seconds` of audio.
int LabelFrameCount(double seconds);

}  // namespace seld

#endif  // SELD_ANNOTATION_H_
