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

#include "railcap/service_network.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "railcap/errors.hpp"

namespace railcap {

std::string to_string(const CapacityRegime& regime) {
  switch (regime.kind) {
    case CapacityRegime::Kind::kNormal: return "normal";
    case CapacityRegime::Kind::kCovid: return "covid";
    case CapacityRegime::Kind::kScale: {
      std::ostringstream out;
      out << "scale=" << regime.scale;
      return out.str();
    }
    case CapacityRegime::Kind::kFixed: {
      std::ostringstream out;
      out << "seats=" << regime.fixed;
      return out.str();
    }
  }
  return "?";
}

CapacityRegime parse_regime(const std::string& text) {
  if (text == "normal") return CapacityRegime::normal();
  if (text == "covid") return CapacityRegime::covid();
  const auto eq = text.find('=');
  if (eq != std::string::npos) {
    const std::string key = text.substr(0, eq);
    const std::string value = text.substr(eq + 1);
    try {
      std::size_t used = 0;
      if (key == "scale") {
        const double s = std::stod(value, &used);
        if (used == value.size()) return CapacityRegime::scaled(s);
      } else if (key == "seats") {
        const long long n = std::stoll(value, &used);
        if (used == value.size()) return CapacityRegime::fixed_seats(n);
      }
    } catch (const std::exception&) {
      // fall through to the config error below
    }
  }
  throw Error(ErrorKind::kConfig,
              "bad regime '" + text + "' (expected normal|covid|scale=X|seats=N)");
}

ServiceNetwork::ServiceNetwork(std::vector<Station> stations,
                               std::vector<ServiceArc> arcs,
                               std::vector<OdPair> od_pairs)
    : stations_(std::move(stations)),
      arcs_(std::move(arcs)),
      od_pairs_(std::move(od_pairs)) {
  out_arcs_.resize(stations_.size());
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    out_arcs_[arcs_[a].from].push_back(static_cast<int>(a));
  }
}

int ServiceNetwork::station_index(const std::string& id) const {
  auto it = std::lower_bound(
      stations_.begin(), stations_.end(), id,
      [](const Station& s, const std::string& key) { return s.id < key; });
  if (it == stations_.end() || it->id != id) return -1;
  return static_cast<int>(it - stations_.begin());
}

int ServiceNetwork::arc_index(int from, int to) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), std::pair{from, to},
                             [](const ServiceArc& a, const std::pair<int, int>& key) {
                               return std::pair{a.from, a.to} < key;
                             });
  if (it == arcs_.end() || it->from != from || it->to != to) return -1;
  return static_cast<int>(it - arcs_.begin());
}

std::vector<double> ServiceNetwork::arc_costs() const {
  std::vector<double> costs(arcs_.size());
  for (std::size_t a = 0; a < arcs_.size(); ++a) costs[a] = arcs_[a].cost_minutes;
  return costs;
}

std::vector<double> ServiceNetwork::arc_capacities() const {
  std::vector<double> caps(arcs_.size());
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    caps[a] = static_cast<double>(arcs_[a].seat_capacity);
  }
  return caps;
}

ServiceNetwork build_service_network(const std::vector<Station>& stations,
                                     const std::vector<Link>& links,
                                     const std::vector<Train>& trains,
                                     const std::vector<OdPair>& od_pairs) {
  if (trains.empty()) {
    throw Error(ErrorKind::kEmptyTimetable, "no trains in the timetable");
  }

  std::vector<Station> sorted_stations = stations;
  std::sort(sorted_stations.begin(), sorted_stations.end(),
            [](const Station& a, const Station& b) { return a.id < b.id; });

  std::map<std::string, int> station_index;
  for (std::size_t i = 0; i < sorted_stations.size(); ++i) {
    if (!station_index.emplace(sorted_stations[i].id, static_cast<int>(i)).second) {
      throw Error(ErrorKind::kDuplicateId,
                  "station id '" + sorted_stations[i].id + "'");
    }
  }

  struct Accum {
    std::int64_t seats = 0;
    double time_sum = 0.0;
    std::vector<std::string> trains;
  };
  std::map<std::pair<int, int>, Accum> traversals;

  for (const auto& train : trains) {
    if (train.travel_times.size() != train.route.size()) {
      throw Error(ErrorKind::kInvalidInput,
                  "train " + train.id + " has misaligned travel times");
    }
    for (std::size_t i = 0; i < train.route.size(); ++i) {
      const auto& leg = train.route[i];
      const auto from_it = station_index.find(leg.from);
      const auto to_it = station_index.find(leg.to);
      if (from_it == station_index.end() || to_it == station_index.end()) {
        throw Error(ErrorKind::kUnknownStation,
                    "train " + train.id + " references unknown station");
      }
      auto& acc = traversals[{from_it->second, to_it->second}];
      acc.seats += train.seats;
      acc.time_sum += train.travel_times[i];
      acc.trains.push_back(train.id);
    }
  }
  (void)links;  // the service graph keeps only traversed relations

  std::vector<ServiceArc> arcs;
  arcs.reserve(traversals.size());
  for (auto& [key, acc] : traversals) {
    ServiceArc arc;
    arc.from = key.first;
    arc.to = key.second;
    arc.seat_capacity = acc.seats;
    arc.cost_minutes = acc.time_sum / static_cast<double>(acc.trains.size());
    std::sort(acc.trains.begin(), acc.trains.end());
    arc.serving_trains = std::move(acc.trains);
    arcs.push_back(std::move(arc));
  }

  std::vector<OdPair> sorted_ods = od_pairs;
  std::sort(sorted_ods.begin(), sorted_ods.end(),
            [](const OdPair& a, const OdPair& b) {
              return std::tie(a.origin, a.destination) <
                     std::tie(b.origin, b.destination);
            });

  return ServiceNetwork(std::move(sorted_stations), std::move(arcs),
                        std::move(sorted_ods));
}

std::vector<Train> apply_capacity_regime(const std::vector<Train>& trains,
                                         const CapacityRegime& regime) {
  std::vector<Train> result = trains;
  for (auto& train : result) {
    switch (regime.kind) {
      case CapacityRegime::Kind::kNormal:
        train.seats = kNormalSeatsPerTrain;
        break;
      case CapacityRegime::Kind::kCovid:
        train.seats = kCovidSeatsPerTrain;
        break;
      case CapacityRegime::Kind::kScale: {
        const double scaled = regime.scale * static_cast<double>(train.seats);
        if (scaled < 0.0) {
          throw Error(ErrorKind::kNegativeCapacity,
                      "scale " + std::to_string(regime.scale) + " on train " +
                          train.id);
        }
        train.seats = std::llround(scaled);
        break;
      }
      case CapacityRegime::Kind::kFixed:
        if (regime.fixed < 0) {
          throw Error(ErrorKind::kNegativeCapacity,
                      std::to_string(regime.fixed) + " seats");
        }
        train.seats = regime.fixed;
        break;
    }
  }
  return result;
}

std::vector<OdPair> filter_demand(const std::vector<OdPair>& od_pairs,
                                  double threshold) {
  if (threshold < 0.0) {
    throw Error(ErrorKind::kConfig, "demand threshold must be >= 0");
  }
  std::vector<OdPair> kept;
  kept.reserve(od_pairs.size());
  for (const auto& od : od_pairs) {
    if (od.demand > threshold) kept.push_back(od);
  }
  return kept;
}

}  // namespace railcap
