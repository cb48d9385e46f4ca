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

#include "seld/metadata_csv.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "seld/angles.h"
#include "seld/error.h"

namespace seld {

namespace {

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

AnnotationList ParseMetadataCsv(const std::string& text,
                                const std::string& source_name) {
  AnnotationList out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = Trim(line);
    if (line.empty()) continue;
    const std::string where = source_name + ":" + std::to_string(line_no) + ": ";

    std::vector<int> fields;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) {
      cell = Trim(cell);
      int value = 0;
      const auto [ptr, ec] =
          std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        ThrowDataError(where + "non-integer field '" + cell + "'");
      }
      fields.push_back(value);
    }
    if (line.back() == ',') ThrowDataError(where + "empty trailing field");
    if (fields.size() != 5) {
      ThrowDataError(where + "expected 5 columns, found " +
                     std::to_string(fields.size()));
    }
    if (fields[0] < 0) ThrowDataError(where + "negative frame index");
    if (fields[1] < 0 || fields[1] >= kNumClasses) {
      ThrowDataError(where + "class index out of range");
    }
    if (fields[2] < 0) ThrowDataError(where + "negative source index");
    if (fields[3] < -180 || fields[3] >= 180) {
      ThrowDataError(where + "azimuth out of range");
    }
    if (fields[4] < -90 || fields[4] > 90) {
      ThrowDataError(where + "elevation out of range");
    }
    out.push_back({fields[0], fields[1], fields[2],
                   static_cast<double>(fields[3]),
                   static_cast<double>(fields[4])});
  }
  return out;
}

AnnotationList ReadMetadataCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) ThrowIoError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseMetadataCsv(buf.str(), path.string());
}

EventAnnotation RoundForStorage(const EventAnnotation& a) {
  EventAnnotation r = a;
  r.azimuth_deg = WrapAzimuth(std::round(a.azimuth_deg));
  r.elevation_deg = std::round(a.elevation_deg);
  // Wrapping can produce -0.0, which would print as "-0".
  if (r.azimuth_deg == 0.0) r.azimuth_deg = 0.0;
  if (r.elevation_deg == 0.0) r.elevation_deg = 0.0;
  return r;
}

AnnotationList RoundForStorage(const AnnotationList& annotations) {
  AnnotationList out;
  out.reserve(annotations.size());
  for (const auto& a : annotations) out.push_back(RoundForStorage(a));
  return out;
}

std::string FormatMetadataCsv(const AnnotationList& annotations) {
  AnnotationList rows = RoundForStorage(annotations);
  SortAnnotations(rows);
  std::string out;
  for (const auto& a : rows) {
    out += std::to_string(a.frame_index) + "," + std::to_string(a.class_index) +
           "," + std::to_string(a.source_index) + "," +
           std::to_string(static_cast<int>(a.azimuth_deg)) + "," +
           std::to_string(static_cast<int>(a.elevation_deg)) + "\n";
  }
  return out;
}

void WriteMetadataCsv(const std::filesystem::path& path,
                      const AnnotationList& annotations) {
  const std::string text = FormatMetadataCsv(annotations);
  std::ofstream out(path);
  if (!out) ThrowIoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) ThrowIoError("failed writing " + path.string());
}

}  // namespace seld
