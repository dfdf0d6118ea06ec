// Copyright (C) 2026 dpslam contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

namespace dpslam {

// Minimal CSV writer with deterministic number formatting ("%.12g"), so a
// given run always produces identical bytes.
class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& file);

  CsvWriter& field(const std::string& s);
  CsvWriter& field(double v);
  CsvWriter& field(long v);
  CsvWriter& field(int v) { return field(static_cast<long>(v)); }
  void end_row();

 private:
  std::ofstream out_;
  bool row_open_ = false;
};

std::string format_double(double v);

// FNV-1a 64-bit checksum of a file's bytes, as a hex string.
std::string file_checksum(const std::filesystem::path& file);

}  // namespace dpslam
