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

#include "seld/angles.h"

#include <cmath>

namespace seld {

namespace {

// Both helpers expect degrees in [0, 90].
double SinQuadrant(double degrees) {
  if (degrees <= 45.0) return std::sin(degrees * kRadiansFromDegrees);
  return std::cos((90.0 - degrees) * kRadiansFromDegrees);
}

double CosQuadrant(double degrees) {
  if (degrees <= 45.0) return std::cos(degrees * kRadiansFromDegrees);
  return std::sin((90.0 - degrees) * kRadiansFromDegrees);
}

}  // namespace

double WrapAzimuth(double degrees) {
  if (degrees >= -180.0 && degrees < 180.0) return degrees;
  double wrapped = std::fmod(degrees + 180.0, 360.0);
  if (wrapped < 0.0) wrapped += 360.0;
  wrapped -= 180.0;
  // fmod can land exactly on 360 - 180 after rounding of tiny negatives.
  if (wrapped >= 180.0) wrapped -= 360.0;
  return wrapped;
}

double SinDeg(double degrees) {
  const double x = WrapAzimuth(degrees);
  const bool negative = x < 0.0;
  double a = negative ? -x : x;  // [0, 180]
  if (a > 90.0) a = 180.0 - a;   // exact for a in [90, 180]
  const double s = SinQuadrant(a);
  return negative ? -s : s;
}

double CosDeg(double degrees) {
  const double a = std::fabs(WrapAzimuth(degrees));  // [0, 180]
  if (a > 90.0) return -CosQuadrant(180.0 - a);
  return CosQuadrant(a);
}

}  // namespace seld
