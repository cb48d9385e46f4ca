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

#include "seld/output_set.h"

#include <fstream>
#include <system_error>

#include "seld/error.h"

namespace seld {

namespace fs = std::filesystem;

OutputSet::~OutputSet() {
  if (committed_) return;
  std::error_code ec;
  for (auto it = files_.rbegin(); it != files_.rend(); ++it) fs::remove(*it, ec);
  for (auto it = created_dirs_.rbegin(); it != created_dirs_.rend(); ++it) {
    if (fs::is_empty(*it, ec)) fs::remove(*it, ec);
  }
}

void OutputSet::EnsureDirectory(const fs::path& dir) {
  if (dir.empty()) return;
  std::vector<fs::path> missing;
  for (fs::path p = dir; !p.empty() && !fs::exists(p); p = p.parent_path()) {
    missing.push_back(p);
    if (p == p.parent_path()) break;
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) ThrowIoError("cannot create directory " + dir.string() + ": " + ec.message());
  created_dirs_.insert(created_dirs_.end(), missing.rbegin(), missing.rend());
}

fs::path OutputSet::File(const fs::path& path) {
  EnsureDirectory(path.parent_path());
  files_.push_back(path);
  return path;
}

void WriteTextFile(OutputSet& outputs, const fs::path& path,
                   const std::string& text) {
  std::ofstream out(outputs.File(path), std::ios::binary);
  if (!out) ThrowIoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) ThrowIoError("failed writing " + path.string());
}

}  // namespace seld
