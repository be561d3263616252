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

#include <algorithm>
#include <map>
#include <set>

#include "railcap/errors.hpp"
#include "railcap/io.hpp"
#include "csv.hpp"
#include "log.hpp"

namespace railcap::io {

namespace {

std::string location(const std::filesystem::path& file, int line) {
  return file.filename().string() + ":" + std::to_string(line);
}

// "HH:MM" or "HH:MM:SS"; GTFS allows hours beyond 23.
double parse_clock_minutes(const std::string& text,
                           const std::filesystem::path& file, int line) {
  int h = 0, m = 0, s = 0;
  const int fields = std::sscanf(text.c_str(), "%d:%d:%d", &h, &m, &s);
  if (fields < 2 || h < 0 || m < 0 || m > 59 || s < 0 || s > 59) {
    throw Error(ErrorKind::kParse,
                location(file, line) + ": bad time '" + text + "'");
  }
  return h * 60.0 + m + s / 60.0;
}

}  // namespace

TimeWindow parse_window(const std::string& text) {
  int h1, m1, h2, m2;
  if (std::sscanf(text.c_str(), "%d:%d-%d:%d", &h1, &m1, &h2, &m2) != 4 ||
      h1 < 0 || h2 < 0 || m1 < 0 || m1 > 59 || m2 < 0 || m2 > 59) {
    throw Error(ErrorKind::kConfig,
                "bad window '" + text + "' (expected HH:MM-HH:MM)");
  }
  const TimeWindow window{h1 * 60.0 + m1, h2 * 60.0 + m2};
  if (!(window.start_min < window.end_min)) {
    throw Error(ErrorKind::kConfig, "empty window '" + text + "'");
  }
  return window;
}

NetworkInputs import_gtfs_lite(const std::filesystem::path& dir,
                               const TimeWindow& window) {
  NetworkInputs inputs;

  const auto stops_file = dir / "stops.txt";
  std::set<std::string> stop_ids;
  for (const auto& row :
       io_detail::read_csv(stops_file, {"stop_id"}, {"stop_name"})) {
    if (row.values[0].empty()) {
      throw Error(ErrorKind::kParse,
                  location(stops_file, row.line) + ": empty stop_id");
    }
    if (!stop_ids.insert(row.values[0]).second) {
      throw Error(ErrorKind::kDuplicateId, location(stops_file, row.line) +
                                               ": stop '" + row.values[0] + "'");
    }
    inputs.stations.push_back({row.values[0], row.values[1]});
  }

  const auto trips_file = dir / "trips.txt";
  std::set<std::string> trip_ids;
  for (const auto& row : io_detail::read_csv(trips_file, {"trip_id"})) {
    if (!trip_ids.insert(row.values[0]).second) {
      throw Error(ErrorKind::kDuplicateId, location(trips_file, row.line) +
                                               ": trip '" + row.values[0] + "'");
    }
  }

  struct StopTime {
    long long seq;
    std::string stop;
    double arr;
    double dep;
    int line;
  };
  const auto times_file = dir / "stop_times.txt";
  std::map<std::string, std::vector<StopTime>> by_trip;
  std::set<std::pair<std::string, long long>> seen;
  for (const auto& row : io_detail::read_csv(
           times_file,
           {"trip_id", "arrival_time", "departure_time", "stop_id",
            "stop_sequence"})) {
    const auto& trip = row.values[0];
    if (!trip_ids.count(trip)) {
      throw Error(ErrorKind::kReference,
                  location(times_file, row.line) + ": unknown trip '" + trip + "'");
    }
    if (!stop_ids.count(row.values[3])) {
      throw Error(ErrorKind::kReference, location(times_file, row.line) +
                                             ": unknown stop '" + row.values[3] +
                                             "'");
    }
    const long long seq =
        io_detail::parse_int(row.values[4], times_file, row.line, "stop_sequence");
    if (!seen.insert({trip, seq}).second) {
      throw Error(ErrorKind::kDuplicateId,
                  location(times_file, row.line) + ": stop_sequence " +
                      std::to_string(seq) + " of trip '" + trip + "'");
    }
    by_trip[trip].push_back({seq, row.values[3],
                             parse_clock_minutes(row.values[1], times_file, row.line),
                             parse_clock_minutes(row.values[2], times_file, row.line),
                             row.line});
  }

  std::set<std::pair<std::string, std::string>> inferred_links;
  for (auto& [trip, stop_times] : by_trip) {
    std::sort(stop_times.begin(), stop_times.end(),
              [](const StopTime& a, const StopTime& b) { return a.seq < b.seq; });

    for (std::size_t i = 0; i < stop_times.size(); ++i) {
      if (stop_times[i].dep < stop_times[i].arr) {
        throw Error(ErrorKind::kNonMonotoneStopTimes,
                    location(times_file, stop_times[i].line) + ": trip '" + trip +
                        "' departs before it arrives");
      }
      if (i > 0 && stop_times[i].arr < stop_times[i - 1].dep) {
        throw Error(ErrorKind::kNonMonotoneStopTimes,
                    location(times_file, stop_times[i].line) + ": trip '" + trip +
                        "' arrives before the previous departure");
      }
      if (i > 0 && stop_times[i].stop == stop_times[i - 1].stop) {
        throw Error(ErrorKind::kParse,
                    location(times_file, stop_times[i].line) + ": trip '" + trip +
                        "' repeats stop '" + stop_times[i].stop + "'");
      }
    }

    const double first_departure = stop_times.front().dep;
    if (first_departure < window.start_min || first_departure >= window.end_min) {
      continue;  // trip outside the peak window
    }
    if (stop_times.size() < 2) {
      logx::debug("skipping single-stop trip '" + trip + "'");
      continue;
    }

    Train train;
    train.id = trip;
    train.seats = kNormalSeatsPerTrain;  // until a regime is applied
    for (std::size_t i = 0; i + 1 < stop_times.size(); ++i) {
      train.route.push_back({stop_times[i].stop, stop_times[i + 1].stop, {}});
      train.travel_times.push_back(stop_times[i + 1].arr - stop_times[i].dep);
      inferred_links.insert({stop_times[i].stop, stop_times[i + 1].stop});
    }
    inputs.trains.push_back(std::move(train));
  }

  inputs.links.reserve(inferred_links.size());
  for (const auto& [from, to] : inferred_links) {
    inputs.links.push_back({from, to, std::nullopt});
  }
  return inputs;
}

}  // namespace railcap::io
