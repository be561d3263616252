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

#ifndef RAILCAP_CLI_HPP_
#define RAILCAP_CLI_HPP_

#include <string>
#include <vector>

#include "railcap/metrics.hpp"
#include "railcap/reporting.hpp"

namespace railcap::cli {

// Exit codes: 0 success, 1 usage/config error, 2 data error, 3 solver
// failure.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitData = 2;
constexpr int kExitSolver = 3;

struct RunConfig {
  std::string input_dir;    // native model directory
  std::string gtfs_dir;     // GTFS-lite directory (alternative to input_dir)
  std::string demand_file;  // required with --gtfs
  std::string window;       // HH:MM-HH:MM, required with --gtfs

  std::vector<std::string> regimes = {"normal", "covid"};  // sweep regimes
  std::string regime = "normal";                           // solve regime
  double share = 1.0;                                      // solve share
  std::vector<double> shares = {0.05, 0.25, 0.5, 0.75, 1.0};
  double demand_threshold = kDefaultDemandThreshold;
  double detour_factor = 3.0;
  int yen_k = 8;
  int max_rounds = 50;
  std::string allocation = "proportional";
  std::string objective = "inverse-cost";  // or "demand"
  std::string out_dir;
  std::string format = "csv";
  bool parallel = true;
};

/// Validates the cross-field constraints (input source, share ranges,
/// positive tolerances). Throws Error(kConfig) on the first problem.
void check_config(const RunConfig& config, bool sweep_shares);

int cmd_validate(const RunConfig& config);
int cmd_solve(const RunConfig& config);
int cmd_sweep(const RunConfig& config);
int cmd_report(const RunConfig& config);

}  // namespace railcap::cli

#endif  // RAILCAP_CLI_HPP_
