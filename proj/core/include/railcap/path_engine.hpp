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

#ifndef RAILCAP_PATH_ENGINE_HPP_
#define RAILCAP_PATH_ENGINE_HPP_

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "railcap/service_network.hpp"

namespace railcap {

constexpr int kNoOd = -1;

/// A simple directed path through the service network for one OD pair.
/// cost is always the sum of the member arcs' cost_minutes, independent of
/// whatever weights the search that produced the path used.
struct PassengerPath {
  int od = kNoOd;          // index into ServiceNetwork::od_pairs()
  std::vector<int> arcs;   // indices into ServiceNetwork::arcs()
  double cost = 0.0;

  friend bool operator==(const PassengerPath&, const PassengerPath&) = default;
};

/// Dual prices of a solved restricted master: one per OD share constraint
/// and one per arc capacity constraint. Both families are >= 0.
struct DualPrices {
  std::vector<double> od_duals;   // by OD index
  std::vector<double> arc_duals;  // by arc index
};

/// Minimum-weight simple path under the given per-arc weights (all
/// strictly positive). Ties are broken toward the lexicographically
/// smallest station-id sequence, so the result is deterministic. Returns
/// nullopt when the destination is unreachable; the returned path has
/// od == kNoOd.
std::optional<PassengerPath> shortest_path(const ServiceNetwork& network,
                                           const std::string& origin,
                                           const std::string& destination,
                                           std::span<const double> arc_weights);

/// As above but by station index, with optional arc/station exclusion
/// masks (used by the k-shortest-path search).
std::optional<PassengerPath> shortest_path(
    const ServiceNetwork& network, int origin, int destination,
    std::span<const double> arc_weights,
    const std::vector<bool>* banned_arcs = nullptr,
    const std::vector<bool>* banned_stations = nullptr);

/// Yen's algorithm: up to k loopless paths in nondecreasing weight order
/// (ties by station sequence). Paths with weight > max_weight are not
/// emitted; with k large enough the enumeration is exhaustive.
std::vector<PassengerPath> k_shortest_paths(
    const ServiceNetwork& network, int origin, int destination,
    std::span<const double> arc_weights, int k,
    double max_weight = std::numeric_limits<double>::infinity());

struct InitialColumns {
  std::vector<std::vector<PassengerPath>> columns;  // by OD index
  std::vector<int> unroutable;                      // OD indices with no path
};

/// One shortest path per OD pair under plain arc costs. OD pairs whose
/// destination is unreachable get no column and are listed as unroutable;
/// their demand stays unserved.
InitialColumns initial_columns(const ServiceNetwork& network);

struct PricingConfig {
  double reduced_cost_tol = 1e-9;  // absolute
  double detour_factor = 3.0;      // reject paths costlier than this x shortest
  int yen_k = 8;                   // k-shortest-path fallback budget
  int columns_per_od = 1;          // new columns per OD pair per round
  bool inverse_cost_objective = true;
};

/// Prices new candidate paths against the master duals: a path p for OD k
/// improves the master when
///   d_k / c_p - mu_k - d_k * sum(lambda_arc for arc in p) > tol.
/// The search probes shortest paths under weights cost + theta * lambda
/// for a ladder of theta values, then falls back to enumerating k-shortest
/// paths by plain cost, and accepts the first improving candidates. Never
/// returns a path already present in `existing`; returns at most
/// columns_per_od new paths per OD pair, empty when nothing improves.
std::vector<PassengerPath> price_paths(
    const ServiceNetwork& network, const DualPrices& duals,
    const std::vector<std::vector<PassengerPath>>& existing,
    const PricingConfig& config = {});

}  // namespace railcap

#endif  // RAILCAP_PATH_ENGINE_HPP_
