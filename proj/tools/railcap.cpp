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

#include <CLI11.hpp>

#include "railcap/cli.hpp"

namespace {

void add_input_options(CLI::App* cmd, railcap::cli::RunConfig& config) {
  cmd->add_option("--input", config.input_dir,
                  "Native model directory (stations/links/trains/"
                  "train_stops/demand CSVs)");
  cmd->add_option("--gtfs", config.gtfs_dir, "GTFS-lite directory");
  cmd->add_option("--demand", config.demand_file,
                  "Demand CSV (required with --gtfs)");
  cmd->add_option("--window", config.window,
                  "Peak window HH:MM-HH:MM (required with --gtfs)");
}

void add_solver_options(CLI::App* cmd, railcap::cli::RunConfig& config) {
  cmd->add_option("--threshold", config.demand_threshold,
                  "Keep OD pairs with demand strictly above this")
      ->capture_default_str();
  cmd->add_option("--detour-factor", config.detour_factor,
                  "Reject candidate paths costlier than this x shortest")
      ->capture_default_str();
  cmd->add_option("--yen-k", config.yen_k,
                  "k-shortest-path budget of the pricing fallback")
      ->capture_default_str();
  cmd->add_option("--max-rounds", config.max_rounds,
                  "Column generation round budget")
      ->capture_default_str();
  cmd->add_option("--allocation", config.allocation,
                  "Train load split: proportional|equal")
      ->capture_default_str();
  cmd->add_option("--objective", config.objective,
                  "Flow objective weight: inverse-cost|demand")
      ->capture_default_str();
}

void add_output_options(CLI::App* cmd, railcap::cli::RunConfig& config,
                        bool required) {
  auto* out = cmd->add_option("--out", config.out_dir, "Output directory");
  if (required) out->required();
  cmd->add_option("--format", config.format, "Summary format: csv|json")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"railcap - railway transport capacity assessment"};
  app.require_subcommand(1);

  railcap::cli::RunConfig config;
  int rc = railcap::cli::kExitConfig;

  auto* validate = app.add_subcommand(
      "validate", "Check the timetable for continuity and capacity");
  add_input_options(validate, config);
  validate->callback([&] { rc = railcap::cli::cmd_validate(config); });

  auto* solve =
      app.add_subcommand("solve", "Solve a single demand/capacity scenario");
  add_input_options(solve, config);
  solve->add_option("--regime", config.regime,
                    "Seat regime: normal|covid|scale=X|seats=N")
      ->capture_default_str();
  solve->add_option("--share", config.share, "Demand share in [0,1]")
      ->capture_default_str();
  add_solver_options(solve, config);
  add_output_options(solve, config, /*required=*/false);
  solve->callback([&] { rc = railcap::cli::cmd_solve(config); });

  auto* sweep = app.add_subcommand(
      "sweep", "Run the demand-share x regime scenario grid");
  add_input_options(sweep, config);
  sweep->add_option("--regime", config.regimes,
                    "Regimes to sweep (repeat or comma-separate)")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--shares", config.shares,
                    "Demand shares in (0,1] (repeat or comma-separate)")
      ->delimiter(',')
      ->capture_default_str();
  add_solver_options(sweep, config);
  add_output_options(sweep, config, /*required=*/true);
  sweep->add_flag("--serial", [&config](std::int64_t) { config.parallel = false; },
                  "Run scenarios one at a time");
  sweep->callback([&] { rc = railcap::cli::cmd_sweep(config); });

  auto* report = app.add_subcommand(
      "report", "Regenerate the summary from stored sweep outputs");
  add_output_options(report, config, /*required=*/true);
  report->callback([&] { rc = railcap::cli::cmd_report(config); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // map every usage problem onto exit code 1 (0 stays 0 for --help)
    const int code = app.exit(e);
    return code == 0 ? 0 : railcap::cli::kExitConfig;
  }
  return rc;
}
