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

#include "railcap/column_generation.hpp"

#include "log.hpp"

namespace railcap {

CgConfig CgConfig::exhaustive() {
  CgConfig config;
  config.pricing.detour_factor = 1e12;
  config.pricing.yen_k = 1 << 20;
  config.max_rounds = 1000;
  return config;
}

CgResult solve_with_column_generation(const ServiceNetwork& network,
                                      const CgConfig& config) {
  CgResult result;
  auto initial = initial_columns(network);
  result.trace.unroutable = std::move(initial.unroutable);
  result.problem = make_master_problem(network, std::move(initial.columns));

  PricingConfig pricing = config.pricing;
  pricing.inverse_cost_objective = config.master.inverse_cost_objective;

  for (int round = 1;; ++round) {
    result.solution = solve_master(result.problem, config.master);
    result.trace.rounds.push_back({result.solution.objective, 0});
    logx::debug("cg round " + std::to_string(round) + " objective " +
                std::to_string(result.solution.objective));

    auto new_columns = price_paths(network, result.solution.duals,
                                   result.problem.columns, pricing);
    if (round >= config.max_rounds) {
      result.trace.round_budget_exhausted = !new_columns.empty();
      break;
    }
    if (new_columns.empty()) break;
    result.trace.rounds.back().columns_added =
        static_cast<int>(new_columns.size());
    for (auto& column : new_columns) {
      result.problem.columns[column.od].push_back(std::move(column));
    }
  }

  for (const auto& cols : result.problem.columns) {
    result.trace.total_columns += static_cast<int>(cols.size());
  }
  if (result.trace.round_budget_exhausted) {
    logx::warn("column generation stopped at the round budget with improving "
               "paths remaining");
  }
  return result;
}

}  // namespace railcap
