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

#ifndef RAILCAP_SERVICE_NETWORK_HPP_
#define RAILCAP_SERVICE_NETWORK_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "railcap/types.hpp"

namespace railcap {

/// A served relation: a directed station pair traversed by at least one
/// scheduled train, carrying the accumulated seat capacity of those trains
/// and their average travel time as the passenger-facing arc cost.
struct ServiceArc {
  int from = -1;  // station index
  int to = -1;    // station index
  std::int64_t seat_capacity = 0;
  double cost_minutes = 0.0;
  std::vector<std::string> serving_trains;  // train ids, sorted

  friend bool operator==(const ServiceArc&, const ServiceArc&) = default;
};

/// Immutable aggregated view of the timetable that the flow solver works
/// on. Stations, arcs and OD pairs are held in canonical order (sorted by
/// id, by (from, to) and by (origin, destination) respectively), so two
/// builds from the same data compare equal regardless of input order.
/// Safe to share across threads once built.
class ServiceNetwork {
 public:
  ServiceNetwork() = default;
  ServiceNetwork(std::vector<Station> stations, std::vector<ServiceArc> arcs,
                 std::vector<OdPair> od_pairs);

  const std::vector<Station>& stations() const { return stations_; }
  const std::vector<ServiceArc>& arcs() const { return arcs_; }
  const std::vector<OdPair>& od_pairs() const { return od_pairs_; }

  int station_index(const std::string& id) const;  // -1 when absent
  int arc_index(int from, int to) const;           // -1 when absent

  /// Out-arcs of a station, as indices into arcs(); ordered by the arc's
  /// destination station (canonical).
  const std::vector<int>& outgoing(int station) const { return out_arcs_[station]; }

  std::vector<double> arc_costs() const;
  std::vector<double> arc_capacities() const;

  friend bool operator==(const ServiceNetwork& a, const ServiceNetwork& b) {
    return a.stations_ == b.stations_ && a.arcs_ == b.arcs_ &&
           a.od_pairs_ == b.od_pairs_;
  }

 private:
  std::vector<Station> stations_;
  std::vector<ServiceArc> arcs_;
  std::vector<OdPair> od_pairs_;
  std::vector<std::vector<int>> out_arcs_;
};

/// Aggregates the timetable into the served-relation graph: every link
/// traversed by at least one train becomes a service arc with
/// seat_capacity = sum of the serving trains' seats and cost = arithmetic
/// mean of their travel minutes on that link. Untraversed links are
/// dropped. Call validate_timetable first; structurally unusable trains
/// (dangling references, misaligned travel times) throw here as well.
ServiceNetwork build_service_network(const std::vector<Station>& stations,
                                     const std::vector<Link>& links,
                                     const std::vector<Train>& trains,
                                     const std::vector<OdPair>& od_pairs);

inline ServiceNetwork build_service_network(const NetworkInputs& inputs) {
  return build_service_network(inputs.stations, inputs.links, inputs.trains,
                               inputs.od_pairs);
}

/// Returns a copy of the trains with seats set per the regime. Scale
/// regimes round to the nearest seat; a custom regime that would produce
/// negative seats throws Error(kNegativeCapacity).
std::vector<Train> apply_capacity_regime(const std::vector<Train>& trains,
                                         const CapacityRegime& regime);

/// Keeps exactly the OD pairs with demand strictly greater than the
/// threshold.
std::vector<OdPair> filter_demand(const std::vector<OdPair>& od_pairs,
                                  double threshold);

}  // namespace railcap

#endif  // RAILCAP_SERVICE_NETWORK_HPP_
