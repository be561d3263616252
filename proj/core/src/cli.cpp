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

#include "railcap/cli.hpp"

#include <algorithm>
#include <iostream>

#include "railcap/errors.hpp"
#include "railcap/io.hpp"
#include "railcap/validation.hpp"
#include "log.hpp"

namespace railcap::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfig:
    case ErrorKind::kUnknownPolicy:
      return kExitConfig;
    case ErrorKind::kNumericalFailure:
    case ErrorKind::kInstanceTooLarge:
      return kExitSolver;
    default:
      return kExitData;
  }
}

std::string one_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    std::cerr << "railcap: error: " << one_line(e.what()) << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "railcap: error: InternalError: " << one_line(e.what()) << "\n";
    return kExitSolver;
  }
}

NetworkInputs load_inputs(const RunConfig& config, bool apply_filter) {
  NetworkInputs inputs;
  if (!config.input_dir.empty()) {
    inputs = io::import_native(config.input_dir);
  } else {
    inputs = io::import_gtfs_lite(config.gtfs_dir,
                                  io::parse_window(config.window));
    inputs.od_pairs = io::import_demand(config.demand_file, inputs.stations);
  }
  if (apply_filter) {
    const auto before = inputs.od_pairs.size();
    inputs.od_pairs = filter_demand(inputs.od_pairs, config.demand_threshold);
    logx::info("demand filter kept " + std::to_string(inputs.od_pairs.size()) +
               " of " + std::to_string(before) + " OD pairs");
  }
  return inputs;
}

bool parse_objective(const std::string& text) {
  if (text == "inverse-cost") return true;
  if (text == "demand") return false;
  throw Error(ErrorKind::kConfig,
              "bad objective '" + text + "' (expected inverse-cost|demand)");
}

AssessConfig make_assess_config(const RunConfig& config) {
  AssessConfig assess;
  assess.cg.master.inverse_cost_objective = parse_objective(config.objective);
  assess.cg.pricing.detour_factor = config.detour_factor;
  assess.cg.pricing.yen_k = config.yen_k;
  assess.cg.max_rounds = config.max_rounds;
  assess.allocation = parse_allocation_policy(config.allocation);
  return assess;
}

void require_admissible(const NetworkInputs& inputs) {
  const auto report = validate_timetable(inputs);
  if (!report.admissible()) {
    throw Error(ErrorKind::kInvalidInput,
                "timetable not admissible; run `railcap validate` for details");
  }
}

}  // namespace

void check_config(const RunConfig& config, bool sweep_shares) {
  if (config.input_dir.empty() == config.gtfs_dir.empty()) {
    throw Error(ErrorKind::kConfig,
                "exactly one of --input and --gtfs is required");
  }
  if (!config.gtfs_dir.empty()) {
    if (config.demand_file.empty()) {
      throw Error(ErrorKind::kConfig, "--gtfs requires --demand");
    }
    if (config.window.empty()) {
      throw Error(ErrorKind::kConfig, "--gtfs requires --window");
    }
    io::parse_window(config.window);
  }
  if (config.demand_threshold < 0.0) {
    throw Error(ErrorKind::kConfig, "--threshold must be >= 0");
  }
  if (!(config.detour_factor >= 1.0)) {
    throw Error(ErrorKind::kConfig, "--detour-factor must be >= 1");
  }
  if (config.yen_k < 1) {
    throw Error(ErrorKind::kConfig, "--yen-k must be >= 1");
  }
  if (config.max_rounds < 1) {
    throw Error(ErrorKind::kConfig, "--max-rounds must be >= 1");
  }
  parse_allocation_policy(config.allocation);
  parse_objective(config.objective);
  report::parse_format(config.format);
  if (sweep_shares) {
    if (config.shares.empty()) {
      throw Error(ErrorKind::kConfig, "--shares must not be empty");
    }
    for (double share : config.shares) {
      if (!(share > 0.0 && share <= 1.0)) {
        throw Error(ErrorKind::kConfig, "sweep shares must lie in (0,1]");
      }
    }
    for (const auto& regime : config.regimes) parse_regime(regime);
  } else {
    if (!(config.share >= 0.0 && config.share <= 1.0)) {
      throw Error(ErrorKind::kConfig, "--share must lie in [0,1]");
    }
    parse_regime(config.regime);
  }
}

int cmd_validate(const RunConfig& config) {
  return guarded([&] {
    check_config(config, /*sweep_shares=*/false);
    const auto inputs = load_inputs(config, /*apply_filter=*/false);
    const auto report = validate_timetable(inputs);
    std::cout << report.summary();
    return report.admissible() ? kExitOk : kExitData;
  });
}

int cmd_solve(const RunConfig& config) {
  return guarded([&] {
    check_config(config, /*sweep_shares=*/false);
    const auto inputs = load_inputs(config, /*apply_filter=*/true);
    require_admissible(inputs);

    Scenario scenario{config.share, parse_regime(config.regime), ""};
    const auto result = run_scenario(inputs, scenario, make_assess_config(config));
    std::cout << report::human_summary(result);
    if (!config.out_dir.empty()) {
      report::write_sweep_outputs({result}, config.out_dir,
                                  report::parse_format(config.format));
      std::cout << "wrote " << config.out_dir << "\n";
    }
    return kExitOk;
  });
}

int cmd_sweep(const RunConfig& config) {
  return guarded([&] {
    check_config(config, /*sweep_shares=*/true);
    if (config.out_dir.empty()) {
      throw Error(ErrorKind::kConfig, "sweep requires --out");
    }
    const auto inputs = load_inputs(config, /*apply_filter=*/true);
    require_admissible(inputs);

    std::vector<CapacityRegime> regimes;
    for (const auto& text : config.regimes) regimes.push_back(parse_regime(text));
    const auto grid = make_scenario_grid(regimes, config.shares);
    const auto results =
        run_sweep(inputs, grid, make_assess_config(config), config.parallel);
    report::write_sweep_outputs(results, config.out_dir,
                                report::parse_format(config.format));
    std::cout << "wrote " << results.size() << " scenario(s) to "
              << config.out_dir << "\n";
    return kExitOk;
  });
}

int cmd_report(const RunConfig& config) {
  return guarded([&] {
    if (config.out_dir.empty()) {
      throw Error(ErrorKind::kConfig, "report requires --out");
    }
    const auto warnings = report::regenerate_summary(
        config.out_dir, report::parse_format(config.format));
    for (const auto& warning : warnings) {
      logx::warn("detail mismatch: " + warning);
    }
    std::cout << "regenerated summary in " << config.out_dir << "\n";
    return kExitOk;
  });
}

}  // namespace railcap::cli
