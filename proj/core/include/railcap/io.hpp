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

#ifndef RAILCAP_IO_HPP_
#define RAILCAP_IO_HPP_

#include <filesystem>
#include <string>

#include "railcap/types.hpp"

namespace railcap::io {

/// Native model directory:
///   stations.csv     id,name
///   links.csv        from,to,infra_capacity     (empty capacity = unbounded)
///   trains.csv       id,seats
///   train_stops.csv  train_id,seq,station_id,arr_min,dep_min
///   demand.csv       origin,destination,demand
/// Travel time of a route link is the next stop's arrival minus the
/// previous stop's departure. Diagnostics carry file and line numbers;
/// malformed rows throw Error(kParse), dangling ids Error(kReference),
/// duplicates Error(kDuplicateId).
NetworkInputs import_native(const std::filesystem::path& dir);

/// Writes the model back out in the native layout (full float precision,
/// zero dwell times), such that import_native reproduces an identical
/// model.
void export_native(const NetworkInputs& inputs, const std::filesystem::path& dir);

/// Standalone demand matrix (demand.csv layout), checked against the
/// given station set.
std::vector<OdPair> import_demand(const std::filesystem::path& file,
                                  const std::vector<Station>& stations);

/// Half-open clock interval in minutes of day, e.g. 08:00-09:00.
struct TimeWindow {
  double start_min = 0.0;
  double end_min = 0.0;
};

/// Parses "HH:MM-HH:MM"; throws Error(kConfig) on malformed input or an
/// empty interval.
TimeWindow parse_window(const std::string& text);

/// GTFS-lite import: needs stops.txt (stop_id[,stop_name]), trips.txt
/// (trip_id) and stop_times.txt (trip_id,arrival_time,departure_time,
/// stop_id,stop_sequence). Every trip whose first departure falls inside
/// the window becomes one train; consecutive stops become links (travel
/// time = arrival - previous departure, required positive) and the link
/// set is deduplicated across trips with unbounded infrastructure
/// capacity. Trains default to the normal seat count until a regime is
/// applied. Demand is supplied separately. A stop time running backwards
/// throws Error(kNonMonotoneStopTimes).
NetworkInputs import_gtfs_lite(const std::filesystem::path& dir,
                               const TimeWindow& window);

}  // namespace railcap::io

#endif  // RAILCAP_IO_HPP_
