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

#ifndef RAILCAP_REPORTING_HPP_
#define RAILCAP_REPORTING_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "railcap/metrics.hpp"

namespace railcap::report {

enum class Format { kCsv, kJson };

Format parse_format(const std::string& text);

/// Summary header of results.csv, one column per reported quantity.
extern const char* const kResultsHeader;

/// Writes the per-scenario detail files (<label>_links.csv,
/// <label>_trains.csv, <label>_meta.json) and the summary
/// (results.csv or results.json). All CSV floats use fixed 6-decimal
/// formatting and deterministic row order, so identical runs produce
/// byte-identical files.
void write_sweep_outputs(const std::vector<ScenarioResult>& results,
                         const std::filesystem::path& out_dir, Format format);

/// Rebuilds the summary file from the stored per-scenario outputs without
/// re-solving, byte-identical to the one written at sweep time. Statistics
/// are cross-checked against the detail files; discrepancies beyond
/// rounding are reported as warnings in the returned list.
std::vector<std::string> regenerate_summary(const std::filesystem::path& out_dir,
                                            Format format);

std::string results_csv_row(const ScenarioResult& r);

/// One-paragraph human summary for the terminal.
std::string human_summary(const ScenarioResult& r);

}  // namespace railcap::report

#endif  // RAILCAP_REPORTING_HPP_
