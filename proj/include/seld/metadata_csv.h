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

#ifndef SELD_METADATA_CSV_H_
#define SELD_METADATA_CSV_H_

#include <filesystem>
#include <string>

#include "seld/annotation.h"

namespace seld {

// DCASE metadata: one "frame,class,source,azimuth,elevation" row of integers
// per active record, no header. Azimuth must lie in [-180, 180), elevation in
// [-90, 90]. Blank lines are ignored. Errors are kDataError and name the line.
AnnotationList ParseMetadataCsv(const std::string& text,
                                const std::string& source_name = "<input>");
AnnotationList ReadMetadataCsv(const std::filesystem::path& path);

// Rows sorted by (frame, class, source). Angles are rounded to whole degrees
// and the azimuth is then wrapped, so 179.6 is written as -180.
std::string FormatMetadataCsv(const AnnotationList& annotations);
void WriteMetadataCsv(const std::filesystem::path& path,
                      const AnnotationList& annotations);

// The values `FormatMetadataCsv` would store.
EventAnnotation RoundForStorage(const EventAnnotation& a);
AnnotationList RoundForStorage(const AnnotationList& annotations);

}  // namespace seld

#endif  // SELD_METADATA_CSV_H_
