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

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace railcap::testing {

std::filesystem::path data_dir() { return RAILCAP_TEST_DATA_DIR; }

NetworkInputs inputs_from_arcs(const std::vector<ArcSpec>& arcs,
                               const std::vector<OdPair>& od_pairs) {
  NetworkInputs inputs;
  std::set<std::string> station_ids;
  std::set<std::pair<std::string, std::string>> link_keys;
  for (const auto& arc : arcs) {
    station_ids.insert(arc.from);
    station_ids.insert(arc.to);
    link_keys.insert({arc.from, arc.to});
  }
  for (const auto& id : station_ids) inputs.stations.push_back({id, id});
  for (const auto& [from, to] : link_keys) {
    inputs.links.push_back({from, to, std::nullopt});
  }
  int counter = 0;
  for (const auto& arc : arcs) {
    Train train;
    char buf[16];
    std::snprintf(buf, sizeof(buf), "t%02d", counter++);
    train.id = buf;
    train.route.push_back({arc.from, arc.to, std::nullopt});
    train.travel_times.push_back(arc.cost);
    train.seats = arc.seats;
    inputs.trains.push_back(std::move(train));
  }
  inputs.od_pairs = od_pairs;
  return inputs;
}

ServiceNetwork network_from_arcs(const std::vector<ArcSpec>& arcs,
                                 const std::vector<OdPair>& od_pairs) {
  return build_service_network(inputs_from_arcs(arcs, od_pairs));
}

ServiceNetwork diamond_network(std::int64_t bottom_seats, std::int64_t top_seats,
                               const std::vector<OdPair>& od_pairs) {
  return network_from_arcs({{"a", "b", 10.0, bottom_seats},
                            {"b", "d", 10.0, bottom_seats},
                            {"a", "c", 15.0, top_seats},
                            {"c", "d", 15.0, top_seats}},
                           od_pairs);
}

std::vector<BrutePath> brute_force_paths(const ServiceNetwork& network, int origin,
                                         int destination,
                                         std::span<const double> weights) {
  std::vector<BrutePath> paths;
  std::vector<bool> visited(network.stations().size(), false);
  std::vector<int> stack;
  std::function<void(int, double)> dfs = [&](int u, double weight) {
    if (u == destination) {
      paths.push_back({stack, weight});
      return;
    }
    for (int a : network.outgoing(u)) {
      const int v = network.arcs()[a].to;
      if (visited[v]) continue;
      visited[v] = true;
      stack.push_back(a);
      dfs(v, weight + weights[a]);
      stack.pop_back();
      visited[v] = false;
    }
  };
  visited[origin] = true;
  dfs(origin, 0.0);
  return paths;
}

NetworkInputs random_instance(std::mt19937_64& rng) {
  const int n = std::uniform_int_distribution<int>(4, 8)(rng);
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("s" + std::to_string(i));

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);

  std::set<std::pair<int, int>> arc_keys;
  for (int i = 0; i + 1 < n; ++i) arc_keys.insert({order[i], order[i + 1]});
  const int target =
      std::uniform_int_distribution<int>(n - 1, 14)(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int tries = 0; tries < 200 && static_cast<int>(arc_keys.size()) < target;
       ++tries) {
    const int a = pick(rng);
    const int b = pick(rng);
    if (a != b) arc_keys.insert({a, b});
  }

  std::vector<ArcSpec> arcs;
  std::uniform_int_distribution<int> seat_dist(50, 400);
  std::uniform_int_distribution<int> cost_halves(6, 120);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const auto& [a, b] : arc_keys) {
    const std::int64_t seats = unit(rng) < 0.1 ? 0 : seat_dist(rng);
    arcs.push_back({ids[a], ids[b], cost_halves(rng) / 2.0, seats});
  }

  const int num_ods = std::uniform_int_distribution<int>(1, 5)(rng);
  std::set<std::pair<int, int>> od_keys;
  std::vector<OdPair> ods;
  std::uniform_int_distribution<int> demand_halves(20, 1000);
  for (int tries = 0; tries < 100 && static_cast<int>(od_keys.size()) < num_ods;
       ++tries) {
    const int o = pick(rng);
    const int d = pick(rng);
    if (o == d || !od_keys.insert({o, d}).second) continue;
    const double demand = unit(rng) < 0.1 ? 0.0 : demand_halves(rng) / 2.0;
    ods.push_back({ids[o], ids[d], demand});
  }
  return inputs_from_arcs(arcs, ods);
}

void expect_feasible(const MasterProblem& problem, const FlowSolution& solution,
                     const std::string& context) {
  const auto violations = verify_flow_solution(problem, solution);
  for (const auto& violation : violations) {
    ADD_FAILURE() << context << ": " << violation;
  }
}

}  // namespace railcap::testing
