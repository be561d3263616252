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

#include "railcap/path_engine.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <queue>
#include <set>

#include "railcap/errors.hpp"

namespace railcap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

double plain_cost(const ServiceNetwork& network, const std::vector<int>& arcs) {
  double cost = 0.0;
  for (int a : arcs) cost += network.arcs()[a].cost_minutes;
  return cost;
}

std::vector<int> arcs_from_stations(const ServiceNetwork& network,
                                    const std::vector<int>& stations) {
  std::vector<int> arcs;
  arcs.reserve(stations.size() - 1);
  for (std::size_t i = 0; i + 1 < stations.size(); ++i) {
    const int a = network.arc_index(stations[i], stations[i + 1]);
    assert(a >= 0);
    arcs.push_back(a);
  }
  return arcs;
}

std::vector<int> stations_of(const ServiceNetwork& network,
                             const std::vector<int>& arcs) {
  std::vector<int> seq;
  seq.reserve(arcs.size() + 1);
  seq.push_back(network.arcs()[arcs.front()].from);
  for (int a : arcs) seq.push_back(network.arcs()[a].to);
  return seq;
}

}  // namespace

std::optional<PassengerPath> shortest_path(
    const ServiceNetwork& network, int origin, int destination,
    std::span<const double> arc_weights, const std::vector<bool>* banned_arcs,
    const std::vector<bool>* banned_stations) {
  const auto n = static_cast<int>(network.stations().size());
  if (origin < 0 || origin >= n || destination < 0 || destination >= n) {
    throw Error(ErrorKind::kUnknownStation, "station index out of range");
  }
  if (origin == destination) return std::nullopt;

  // Label-setting search with a composite (distance, station-sequence)
  // label; the sequence part settles ties deterministically. Stations are
  // in id order, so comparing indices compares ids.
  std::vector<double> dist(n, kInf);
  std::vector<std::vector<int>> seqs(n);
  std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>,
                      std::greater<>>
      queue;
  dist[origin] = 0.0;
  seqs[origin] = {origin};
  queue.emplace(0.0, origin);

  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;  // stale entry
    for (int a : network.outgoing(u)) {
      if (banned_arcs && (*banned_arcs)[a]) continue;
      const int v = network.arcs()[a].to;
      if (banned_stations && (*banned_stations)[v]) continue;
      const double w = arc_weights[a];
      assert(w > 0.0);
      const double nd = d + w;
      bool improved = false;
      if (nd < dist[v]) {
        improved = true;
      } else if (nd == dist[v]) {
        std::vector<int> candidate = seqs[u];
        candidate.push_back(v);
        improved = lex_less(candidate, seqs[v]);
      }
      if (improved) {
        dist[v] = nd;
        seqs[v] = seqs[u];
        seqs[v].push_back(v);
        queue.emplace(nd, v);
      }
    }
  }

  if (dist[destination] == kInf) return std::nullopt;
  PassengerPath path;
  path.arcs = arcs_from_stations(network, seqs[destination]);
  path.cost = plain_cost(network, path.arcs);
  return path;
}

std::optional<PassengerPath> shortest_path(const ServiceNetwork& network,
                                           const std::string& origin,
                                           const std::string& destination,
                                           std::span<const double> arc_weights) {
  const int o = network.station_index(origin);
  const int d = network.station_index(destination);
  if (o < 0) throw Error(ErrorKind::kUnknownStation, "'" + origin + "'");
  if (d < 0) throw Error(ErrorKind::kUnknownStation, "'" + destination + "'");
  return shortest_path(network, o, d, arc_weights, nullptr, nullptr);
}

std::vector<PassengerPath> k_shortest_paths(const ServiceNetwork& network,
                                            int origin, int destination,
                                            std::span<const double> arc_weights,
                                            int k, double max_weight) {
  std::vector<PassengerPath> accepted;
  if (k <= 0) return accepted;

  struct Candidate {
    double weight;
    std::vector<int> stations;
    std::vector<int> arcs;

    bool operator<(const Candidate& other) const {
      if (weight != other.weight) return weight < other.weight;
      return lex_less(stations, other.stations);
    }
  };

  auto path_weight = [&](const std::vector<int>& arcs) {
    double w = 0.0;
    for (int a : arcs) w += arc_weights[a];
    return w;
  };

  auto first = shortest_path(network, origin, destination, arc_weights);
  if (!first || path_weight(first->arcs) > max_weight) return accepted;
  accepted.push_back(*first);

  std::vector<std::vector<int>> accepted_stations;
  accepted_stations.push_back(stations_of(network, first->arcs));

  std::set<Candidate> candidates;
  const auto n_arcs = network.arcs().size();
  const auto n_stations = network.stations().size();

  while (static_cast<int>(accepted.size()) < k) {
    const auto& prev_stations = accepted_stations.back();
    const auto& prev_arcs = accepted.back().arcs;

    std::vector<int> root_arcs;
    double root_weight = 0.0;
    for (std::size_t spur = 0; spur < prev_arcs.size(); ++spur) {
      const int spur_station = prev_stations[spur];

      // Ban the continuation arcs of every accepted path sharing this root,
      // and the root stations before the spur, then search for a deviation.
      std::vector<bool> banned_arcs(n_arcs, false);
      std::vector<bool> banned_stations(n_stations, false);
      for (std::size_t p = 0; p < accepted.size(); ++p) {
        const auto& other = accepted[p].arcs;
        if (other.size() < spur + 1) continue;
        if (!std::equal(root_arcs.begin(), root_arcs.end(), other.begin())) {
          continue;
        }
        banned_arcs[other[spur]] = true;
      }
      for (std::size_t i = 0; i < spur; ++i) {
        banned_stations[prev_stations[i]] = true;
      }

      auto spur_path = shortest_path(network, spur_station, destination,
                                     arc_weights, &banned_arcs, &banned_stations);
      if (spur_path) {
        Candidate cand;
        cand.arcs = root_arcs;
        cand.arcs.insert(cand.arcs.end(), spur_path->arcs.begin(),
                         spur_path->arcs.end());
        cand.weight = root_weight + path_weight(spur_path->arcs);
        cand.stations = stations_of(network, cand.arcs);
        if (cand.weight <= max_weight) candidates.insert(std::move(cand));
      }

      root_arcs.push_back(prev_arcs[spur]);
      root_weight += arc_weights[prev_arcs[spur]];
    }

    if (candidates.empty()) break;
    auto best = candidates.begin();
    PassengerPath path;
    path.arcs = best->arcs;
    path.cost = plain_cost(network, path.arcs);
    accepted.push_back(std::move(path));
    accepted_stations.push_back(best->stations);
    candidates.erase(best);
  }
  return accepted;
}

InitialColumns initial_columns(const ServiceNetwork& network) {
  InitialColumns result;
  const auto costs = network.arc_costs();
  result.columns.resize(network.od_pairs().size());
  for (std::size_t k = 0; k < network.od_pairs().size(); ++k) {
    const auto& od = network.od_pairs()[k];
    const int o = network.station_index(od.origin);
    const int d = network.station_index(od.destination);
    if (o < 0 || d < 0) {
      throw Error(ErrorKind::kUnknownStation,
                  od.origin + "->" + od.destination);
    }
    auto path = shortest_path(network, o, d, costs, nullptr, nullptr);
    if (!path) {
      result.unroutable.push_back(static_cast<int>(k));
      continue;
    }
    path->od = static_cast<int>(k);
    result.columns[k].push_back(std::move(*path));
  }
  return result;
}

std::vector<PassengerPath> price_paths(
    const ServiceNetwork& network, const DualPrices& duals,
    const std::vector<std::vector<PassengerPath>>& existing,
    const PricingConfig& config) {
  std::vector<PassengerPath> new_columns;
  const auto costs = network.arc_costs();
  const auto& ods = network.od_pairs();

  for (std::size_t k = 0; k < ods.size(); ++k) {
    const double demand = ods[k].demand;
    if (demand <= 0.0) continue;
    const int o = network.station_index(ods[k].origin);
    const int d = network.station_index(ods[k].destination);
    if (o < 0 || d < 0) continue;

    auto sp = shortest_path(network, o, d, costs, nullptr, nullptr);
    if (!sp) continue;  // unroutable OD pair, nothing to price
    const double shortest_cost = sp->cost;
    const double max_cost = config.detour_factor * shortest_cost;
    const double mu = k < duals.od_duals.size() ? duals.od_duals[k] : 0.0;

    std::set<std::vector<int>> seen;
    for (const auto& col : existing[k]) seen.insert(col.arcs);

    int taken = 0;
    auto reduced_cost = [&](const PassengerPath& path) {
      double lambda_sum = 0.0;
      for (int a : path.arcs) {
        lambda_sum += a < static_cast<int>(duals.arc_duals.size())
                          ? duals.arc_duals[a]
                          : 0.0;
      }
      const double weight =
          config.inverse_cost_objective ? demand / path.cost : demand;
      return weight - mu - demand * lambda_sum;
    };
    auto consider = [&](PassengerPath path) {
      if (path.cost > max_cost) return false;
      if (seen.count(path.arcs)) return false;
      if (reduced_cost(path) <= config.reduced_cost_tol) return false;
      path.od = static_cast<int>(k);
      seen.insert(path.arcs);
      new_columns.push_back(std::move(path));
      return ++taken >= config.columns_per_od;
    };

    // Scalarization probes: shortest paths under cost + theta * lambda for
    // a geometric theta ladder. Sweeping theta walks the supported
    // trade-offs between path cost and dual load; the exact reduced cost
    // decides acceptance.
    bool done = false;
    std::vector<double> thetas = {0.0};
    for (int i = 0; i < 8 && shortest_cost > 0.0; ++i) {
      thetas.push_back(shortest_cost * shortest_cost * std::pow(4.0, i));
    }
    thetas.push_back(1e18);
    std::vector<double> weights(costs.size());
    for (double theta : thetas) {
      for (std::size_t a = 0; a < costs.size(); ++a) {
        const double lam =
            a < duals.arc_duals.size() ? duals.arc_duals[a] : 0.0;
        weights[a] = costs[a] + theta * lam;
      }
      auto probe = shortest_path(network, o, d, weights, nullptr, nullptr);
      if (probe && consider(std::move(*probe))) {
        done = true;
        break;
      }
    }
    if (done) continue;

    // Fallback: enumerate paths by plain cost and take the first improving
    // ones. With a deep enough budget this makes the pricing exhaustive.
    for (auto& path :
         k_shortest_paths(network, o, d, costs, config.yen_k, max_cost)) {
      if (consider(std::move(path))) break;
    }
  }
  return new_columns;
}

}  // namespace railcap
