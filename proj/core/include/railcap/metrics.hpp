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

#ifndef RAILCAP_METRICS_HPP_
#define RAILCAP_METRICS_HPP_

#include <string>
#include <vector>

#include "railcap/column_generation.hpp"
#include "railcap/service_network.hpp"

namespace railcap {

// Utilization >= 1 - kFullUtilizationEps counts as fully utilized.
constexpr double kFullUtilizationEps = 1e-9;

struct Scenario {
  double demand_share = 1.0;  // uniform multiplier on all OD demands, in [0, 1]
  CapacityRegime regime;
  std::string label;
};

std::string make_scenario_label(const CapacityRegime& regime, double share);

/// Statistics over per-arc utilizations (load / seat capacity; 0 for
/// zero-capacity arcs). Median and quantiles take the lower of the two
/// middle candidates; stddev is the population form.
struct LinkStats {
  std::vector<double> utilization;  // by arc index
  double mean = 0.0;
  double median = 0.0;
  double stddev = 0.0;
  double frac_full = 0.0;
  double frac_ge_090 = 0.0;
};

LinkStats link_utilization(const FlowSolution& solution,
                           const ServiceNetwork& network);

enum class AllocationPolicy { kProportionalToSeats, kEqualSplit };

AllocationPolicy parse_allocation_policy(const std::string& text);
std::string to_string(AllocationPolicy policy);

/// Splits every arc's passenger load among the trains serving it. The
/// per-arc sums of the returned loads equal the arc load exactly. Under
/// the proportional policy no train receives more than its seats (up to
/// rounding).
struct TrainLoads {
  // loads[t] is aligned with trains[t].route.
  std::vector<std::vector<double>> loads;
};

TrainLoads allocate_train_loads(const FlowSolution& solution,
                                const ServiceNetwork& network,
                                const std::vector<Train>& trains,
                                AllocationPolicy policy);

struct TrainUtilization {
  std::string train_id;
  std::int64_t seats = 0;
  double avg_util = 0.0;  // mean over the route's links of load / seats
  double max_util = 0.0;  // busiest link
  bool defined = true;    // false for zero-seat trains (excluded from stats)
};

struct TrainStats {
  std::vector<TrainUtilization> per_train;  // aligned with the trains vector
  double avg_mean = 0.0, avg_median = 0.0, avg_q1 = 0.0, avg_q3 = 0.0;
  double max_mean = 0.0, max_median = 0.0, max_q1 = 0.0, max_q3 = 0.0;
  double frac_max_ge_090 = 0.0;
  int zero_seat_trains = 0;
};

TrainStats train_utilization(const TrainLoads& loads,
                             const std::vector<Train>& trains);

struct ArcDetail {
  std::string from;
  std::string to;
  std::int64_t seat_capacity = 0;
  double load = 0.0;
  double utilization = 0.0;
};

struct ScenarioResult {
  Scenario scenario;
  double offered_demand = 0.0;
  double transported = 0.0;
  double unserved_fraction = 0.0;  // 0 when nothing is offered
  double objective = 0.0;
  LinkStats link_stats;
  TrainStats train_stats;
  std::vector<ArcDetail> arcs;
  int rounds = 0;
  int columns = 0;
  int unroutable_od_pairs = 0;
  bool round_budget_exhausted = false;
};

struct AssessConfig {
  CgConfig cg;
  AllocationPolicy allocation = AllocationPolicy::kProportionalToSeats;
};

/// Runs one scenario end to end: scales demands, applies the seat regime,
/// rebuilds the service network, solves by column generation and computes
/// the metric suite. Solver failures are rethrown with the scenario label
/// attached. The inputs are expected to be validated and demand-filtered.
ScenarioResult run_scenario(const NetworkInputs& inputs, const Scenario& scenario,
                            const AssessConfig& config = {});

/// Builds the share x regime grid in deterministic order (regimes outer,
/// shares ascending inner).
std::vector<Scenario> make_scenario_grid(const std::vector<CapacityRegime>& regimes,
                                         const std::vector<double>& shares);

/// Runs all scenarios (concurrently when parallel is true) and returns
/// results in grid order.
std::vector<ScenarioResult> run_sweep(const NetworkInputs& inputs,
                                      const std::vector<Scenario>& grid,
                                      const AssessConfig& config = {},
                                      bool parallel = true);

}  // namespace railcap

#endif  // RAILCAP_METRICS_HPP_
