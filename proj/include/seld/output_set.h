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

#ifndef SELD_OUTPUT_SET_H_
#define SELD_OUTPUT_SET_H_

#include <filesystem>
#include <string>
#include <vector>

namespace seld {

// Files and directories created by one command. Unless Commit() is called,
// the destructor deletes them again (newest first), so a failed run leaves no
// partial outputs behind. Pre-existing directories are never removed.
class OutputSet {
 public:
  OutputSet() = default;
  OutputSet(const OutputSet&) = delete;
  OutputSet& operator=(const OutputSet&) = delete;
  ~OutputSet();

  // Creates `dir` and any missing parents, remembering the new ones.
  void EnsureDirectory(const std::filesystem::path& dir);
  // Registers a file about to be written; its parent directory is created.
  std::filesystem::path File(const std::filesystem::path& path);
  void Commit() { committed_ = true; }

 private:
  std::vector<std::filesystem::path> created_dirs_;
  std::vector<std::filesystem::path> files_;
  bool committed_ = false;
};

// Writes `text` to `path` through `outputs`. Throws kIoError on failure.
void WriteTextFile(OutputSet& outputs, const std::filesystem::path& path,
                   const std::string& text);

}  // namespace seld

#endif  // SELD_OUTPUT_SET_H_
