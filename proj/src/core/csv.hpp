// Copyright 2026 The jcring Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace jcring {

/// Comma-separated output with '#'-prefixed metadata comments and a header
/// row. Numbers are printed with 16 significant digits ('.' decimal) so
/// reruns of identical configs are byte-identical.
class CsvWriter {
 public:
  void comment(const std::string& text) { comments_.push_back(text); }
  void header(std::vector<std::string> columns) { header_ = std::move(columns); }

  void row(const std::vector<double>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) line += ',';
      line += format(values[i]);
    }
    rows_.push_back(std::move(line));
  }

  void row_mixed(const std::vector<std::string>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) line += ',';
      line += values[i];
    }
    rows_.push_back(std::move(line));
  }

  static std::string format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16g", v);
    return buf;
  }

  void write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    for (const auto& c : comments_) out << "# " << c << "\n";
    std::string head;
    for (std::size_t i = 0; i < header_.size(); ++i) {
      if (i) head += ',';
      head += header_[i];
    }
    out << head << "\n";
    for (const auto& r : rows_) out << r << "\n";
  }

 private:
  std::vector<std::string> comments_;
  std::vector<std::string> header_;
  std::vector<std::string> rows_;
};

}  // namespace jcring
