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

#include "railcap/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <map>

#include "railcap/errors.hpp"
#include "railcap/stats.hpp"
#include "log.hpp"

namespace railcap {

namespace {

std::string trim_share(double share) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", share);
  std::string text(buf);
  while (text.back() == '0') text.pop_back();
  if (text.back() == '.') text.pop_back();
  return text;
}

/// Splits `load` by the given non-negative weights so that the parts sum
/// to the load exactly, in any summation order. All parts except the
/// largest-weight one are floored onto a power-of-two grid 40 bits below
/// the load's magnitude; partial sums of grid multiples never round, and
/// the anchor part (load minus an exactly representable subset sum) is
/// exact as well. The anchor absorbs at most n grid steps beyond its
/// proportional share, ~1e-12 relative.
std::vector<double> split_conserving(double load, const std::vector<double>& weights) {
  std::vector<double> parts(weights.size(), 0.0);
  if (weights.empty() || !(load > 0.0)) return parts;

  double weight_sum = 0.0;
  for (double w : weights) weight_sum += w;
  const bool equal = !(weight_sum > 0.0);
  auto weight_of = [&](std::size_t i) { return equal ? 1.0 : weights[i]; };
  const double total_weight =
      equal ? static_cast<double>(weights.size()) : weight_sum;

  std::size_t anchor = 0;
  for (std::size_t i = 1; i < weights.size(); ++i) {
    if (weight_of(i) > weight_of(anchor)) anchor = i;
  }

  const double quantum = std::ldexp(1.0, std::ilogb(load) - 40);
  double others = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i == anchor) continue;
    const double share = load * (weight_of(i) / total_weight);
    parts[i] = std::floor(share / quantum) * quantum;
    others += parts[i];
  }
  parts[anchor] = load - others;
  return parts;
}

}  // namespace

std::string make_scenario_label(const CapacityRegime& regime, double share) {
  std::string regime_part = to_string(regime);
  regime_part.erase(std::remove(regime_part.begin(), regime_part.end(), '='),
                    regime_part.end());
  return regime_part + "_s" + trim_share(share);
}

LinkStats link_utilization(const FlowSolution& solution,
                           const ServiceNetwork& network) {
  LinkStats stats;
  stats.utilization.resize(network.arcs().size(), 0.0);
  for (std::size_t a = 0; a < network.arcs().size(); ++a) {
    const double cap = static_cast<double>(network.arcs()[a].seat_capacity);
    const double load = a < solution.arc_loads.size() ? solution.arc_loads[a] : 0.0;
    stats.utilization[a] = cap > 0.0 ? load / cap : 0.0;
  }
  std::vector<double> sorted = stats.utilization;
  std::sort(sorted.begin(), sorted.end());
  stats.mean = stats::mean(stats.utilization);
  stats.median = stats::median_sorted(sorted);
  stats.stddev = stats::population_stddev(stats.utilization);
  stats.frac_full = stats::fraction(
      stats.utilization, [](double u) { return u >= 1.0 - kFullUtilizationEps; });
  stats.frac_ge_090 =
      stats::fraction(stats.utilization, [](double u) { return u >= 0.9; });
  return stats;
}

AllocationPolicy parse_allocation_policy(const std::string& text) {
  if (text == "proportional") return AllocationPolicy::kProportionalToSeats;
  if (text == "equal") return AllocationPolicy::kEqualSplit;
  throw Error(ErrorKind::kUnknownPolicy,
              "'" + text + "' (expected proportional|equal)");
}

std::string to_string(AllocationPolicy policy) {
  return policy == AllocationPolicy::kProportionalToSeats ? "proportional"
                                                          : "equal";
}

TrainLoads allocate_train_loads(const FlowSolution& solution,
                                const ServiceNetwork& network,
                                const std::vector<Train>& trains,
                                AllocationPolicy policy) {
  TrainLoads result;
  result.loads.resize(trains.size());

  struct Leg {
    int train;
    int position;
  };
  std::map<int, std::vector<Leg>> arc_legs;
  for (std::size_t t = 0; t < trains.size(); ++t) {
    result.loads[t].assign(trains[t].route.size(), 0.0);
    for (std::size_t i = 0; i < trains[t].route.size(); ++i) {
      const auto& leg = trains[t].route[i];
      const int from = network.station_index(leg.from);
      const int to = network.station_index(leg.to);
      const int arc = network.arc_index(from, to);
      if (arc < 0) {
        throw Error(ErrorKind::kUnknownLink,
                    "train " + trains[t].id + " leg " + leg.from + "->" + leg.to +
                        " has no service arc");
      }
      arc_legs[arc].push_back({static_cast<int>(t), static_cast<int>(i)});
    }
  }

  for (const auto& [arc, legs] : arc_legs) {
    const double load =
        arc < static_cast<int>(solution.arc_loads.size()) ? solution.arc_loads[arc] : 0.0;
    std::vector<double> weights(legs.size());
    for (std::size_t i = 0; i < legs.size(); ++i) {
      weights[i] = policy == AllocationPolicy::kProportionalToSeats
                       ? static_cast<double>(trains[legs[i].train].seats)
                       : 1.0;
    }
    const auto parts = split_conserving(load, weights);
    for (std::size_t i = 0; i < legs.size(); ++i) {
      result.loads[legs[i].train][legs[i].position] = parts[i];
    }
  }
  return result;
}

TrainStats train_utilization(const TrainLoads& loads,
                             const std::vector<Train>& trains) {
  TrainStats stats;
  stats.per_train.resize(trains.size());
  std::vector<double> avgs;
  std::vector<double> maxs;
  for (std::size_t t = 0; t < trains.size(); ++t) {
    auto& u = stats.per_train[t];
    u.train_id = trains[t].id;
    u.seats = trains[t].seats;
    if (trains[t].seats <= 0) {
      u.defined = false;
      ++stats.zero_seat_trains;
      continue;
    }
    const auto& train_loads = loads.loads[t];
    double sum = 0.0;
    double busiest = 0.0;
    for (double load : train_loads) {
      const double util = load / static_cast<double>(trains[t].seats);
      sum += util;
      busiest = std::max(busiest, util);
    }
    u.avg_util = train_loads.empty()
                     ? 0.0
                     : sum / static_cast<double>(train_loads.size());
    u.max_util = busiest;
    avgs.push_back(u.avg_util);
    maxs.push_back(u.max_util);
  }

  std::vector<double> sorted_avgs = avgs;
  std::vector<double> sorted_maxs = maxs;
  std::sort(sorted_avgs.begin(), sorted_avgs.end());
  std::sort(sorted_maxs.begin(), sorted_maxs.end());
  stats.avg_mean = stats::mean(avgs);
  stats.avg_median = stats::median_sorted(sorted_avgs);
  stats.avg_q1 = stats::quantile_sorted(sorted_avgs, 0.25);
  stats.avg_q3 = stats::quantile_sorted(sorted_avgs, 0.75);
  stats.max_mean = stats::mean(maxs);
  stats.max_median = stats::median_sorted(sorted_maxs);
  stats.max_q1 = stats::quantile_sorted(sorted_maxs, 0.25);
  stats.max_q3 = stats::quantile_sorted(sorted_maxs, 0.75);
  stats.frac_max_ge_090 =
      stats::fraction(maxs, [](double u) { return u >= 0.9; });
  return stats;
}

ScenarioResult run_scenario(const NetworkInputs& inputs, const Scenario& scenario,
                            const AssessConfig& config) {
  if (scenario.demand_share < 0.0 || scenario.demand_share > 1.0) {
    throw Error(ErrorKind::kConfig, "demand share must be in [0,1]");
  }
  ScenarioResult result;
  result.scenario = scenario;
  if (result.scenario.label.empty()) {
    result.scenario.label =
        make_scenario_label(scenario.regime, scenario.demand_share);
  }

  try {
    auto trains = apply_capacity_regime(inputs.trains, scenario.regime);
    std::sort(trains.begin(), trains.end(),
              [](const Train& a, const Train& b) { return a.id < b.id; });
    auto od_pairs = inputs.od_pairs;
    for (auto& od : od_pairs) od.demand *= scenario.demand_share;

    const auto network =
        build_service_network(inputs.stations, inputs.links, trains, od_pairs);
    const auto cg = solve_with_column_generation(network, config.cg);

    for (const auto& od : network.od_pairs()) result.offered_demand += od.demand;
    result.transported = cg.solution.transported(cg.problem);
    result.transported = std::min(result.transported, result.offered_demand);
    result.unserved_fraction =
        result.offered_demand > 0.0
            ? std::max(0.0, 1.0 - result.transported / result.offered_demand)
            : 0.0;
    result.objective = cg.solution.objective;

    result.link_stats = link_utilization(cg.solution, network);
    const auto loads = allocate_train_loads(cg.solution, network, trains,
                                            config.allocation);
    result.train_stats = train_utilization(loads, trains);

    result.arcs.reserve(network.arcs().size());
    for (std::size_t a = 0; a < network.arcs().size(); ++a) {
      const auto& arc = network.arcs()[a];
      result.arcs.push_back({network.stations()[arc.from].id,
                             network.stations()[arc.to].id, arc.seat_capacity,
                             cg.solution.arc_loads[a],
                             result.link_stats.utilization[a]});
    }
    result.rounds = static_cast<int>(cg.trace.rounds.size());
    result.columns = cg.trace.total_columns;
    result.unroutable_od_pairs = static_cast<int>(cg.trace.unroutable.size());
    result.round_budget_exhausted = cg.trace.round_budget_exhausted;
  } catch (const Error& e) {
    throw Error(e.kind(),
                "scenario '" + result.scenario.label + "': " + e.what());
  }
  return result;
}

std::vector<Scenario> make_scenario_grid(const std::vector<CapacityRegime>& regimes,
                                         const std::vector<double>& shares) {
  std::vector<double> sorted_shares = shares;
  std::sort(sorted_shares.begin(), sorted_shares.end());
  std::vector<Scenario> grid;
  for (const auto& regime : regimes) {
    for (double share : sorted_shares) {
      grid.push_back({share, regime, make_scenario_label(regime, share)});
    }
  }
  return grid;
}

std::vector<ScenarioResult> run_sweep(const NetworkInputs& inputs,
                                      const std::vector<Scenario>& grid,
                                      const AssessConfig& config, bool parallel) {
  std::vector<ScenarioResult> results(grid.size());
  if (parallel && grid.size() > 1) {
    std::vector<std::future<ScenarioResult>> futures;
    futures.reserve(grid.size());
    for (const auto& scenario : grid) {
      futures.push_back(std::async(std::launch::async, [&inputs, scenario,
                                                        &config] {
        return run_scenario(inputs, scenario, config);
      }));
    }
    for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      logx::info("running scenario " + grid[i].label);
      results[i] = run_scenario(inputs, grid[i], config);
    }
  }
  return results;
}

}  // namespace railcap
