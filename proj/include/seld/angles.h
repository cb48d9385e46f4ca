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

#ifndef SELD_ANGLES_H_
#define SELD_ANGLES_H_

namespace seld {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kRadiansFromDegrees = kPi / 180.0;
inline constexpr double kDegreesFromRadians = 180.0 / kPi;

// Wraps an azimuth in degrees to the half-open interval [-180, 180).
double WrapAzimuth(double degrees);

// Sine and cosine of an angle given in degrees. The argument is reduced with
// exact symmetries before conversion to radians, so that mirrored angles
// (x and 180 - x, x and -x) produce bit-identical magnitudes and the cardinal
// directions evaluate to exact 0 and +-1.
double SinDeg(double degrees);
double CosDeg(double degrees);

}  // namespace seld

#endif  // SELD_ANGLES_H_
