// Copyright 2026 The Railcap Authors
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

#ifndef RAILCAP_SRC_CSV_HPP_
#define RAILCAP_SRC_CSV_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace railcap::io_detail {

struct CsvRow {
  std::vector<std::string> values;  // aligned with the requested columns
  int line = 0;
};

/// Header-based CSV table: the requested columns may appear in any order,
/// extra columns are ignored. Handles double-quoted fields, CRLF and a
/// UTF-8 BOM; blank lines are skipped. Throws Error(kParse) with file and
/// line context for anything malformed or a missing required column.
std::vector<CsvRow> read_csv(const std::filesystem::path& file,
                             const std::vector<std::string>& required,
                             const std::vector<std::string>& optional = {});

double parse_double(const std::string& text, const std::filesystem::path& file,
                    int line, const std::string& column);
long long parse_int(const std::string& text, const std::filesystem::path& file,
                    int line, const std::string& column);

std::string csv_quote(const std::string& value);

/// Full-precision float formatting for model files: integral values print
/// without a fraction, everything else round-trips exactly.
std::string format_number(double value);

}  // namespace railcap::io_detail

#endif  // RAILCAP_SRC_CSV_HPP_
