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

#include "railcap/validation.hpp"

#include <map>
#include <set>
#include <sstream>

#include "railcap/errors.hpp"

namespace railcap {

std::string to_string(TrainViolationKind kind) {
  switch (kind) {
    case TrainViolationKind::kEmptyRoute: return "EmptyRoute";
    case TrainViolationKind::kDiscontinuousRoute: return "DiscontinuousRoute";
    case TrainViolationKind::kRepeatedStation: return "RepeatedStation";
    case TrainViolationKind::kTravelTimeCountMismatch:
      return "TravelTimeCountMismatch";
    case TrainViolationKind::kNonPositiveTravelTime:
      return "NonPositiveTravelTime";
  }
  return "?";
}

bool ValidationReport::admissible() const {
  if (!train_violations.empty()) return false;
  return capacity_violations() == 0;
}

int ValidationReport::capacity_violations() const {
  int n = 0;
  for (const auto& usage : link_usage) {
    if (usage.exceeded) ++n;
  }
  return n;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (const auto& v : train_violations) {
    out << "train " << v.train_id << ": " << to_string(v.kind);
    if (!v.detail.empty()) out << " (" << v.detail << ")";
    out << "\n";
  }
  for (const auto& u : link_usage) {
    out << "link " << u.from << "->" << u.to << ": " << u.serving_trains
        << " train(s), capacity ";
    if (u.infra_capacity) {
      out << *u.infra_capacity;
    } else {
      out << "unbounded";
    }
    if (u.exceeded) out << "  EXCEEDED";
    out << "\n";
  }
  out << (admissible() ? "timetable admissible" : "timetable NOT admissible")
      << "\n";
  return out.str();
}

ValidationReport validate_timetable(const std::vector<Station>& stations,
                                    const std::vector<Link>& links,
                                    const std::vector<Train>& trains) {
  std::set<std::string> station_ids;
  for (const auto& s : stations) station_ids.insert(s.id);

  std::map<std::pair<std::string, std::string>, const Link*> link_index;
  for (const auto& l : links) {
    if (!station_ids.count(l.from)) {
      throw Error(ErrorKind::kUnknownStation,
                  "link " + l.from + "->" + l.to + " references station '" +
                      l.from + "'");
    }
    if (!station_ids.count(l.to)) {
      throw Error(ErrorKind::kUnknownStation,
                  "link " + l.from + "->" + l.to + " references station '" +
                      l.to + "'");
    }
    link_index[{l.from, l.to}] = &l;
  }

  ValidationReport report;
  std::map<std::pair<std::string, std::string>, int> train_counts;

  for (const auto& train : trains) {
    if (train.route.empty()) {
      report.train_violations.push_back(
          {TrainViolationKind::kEmptyRoute, train.id, ""});
      continue;
    }
    // Resolve references first; those failures abort the run.
    for (const auto& leg : train.route) {
      if (!station_ids.count(leg.from) || !station_ids.count(leg.to)) {
        throw Error(ErrorKind::kUnknownStation,
                    "train " + train.id + " references station '" +
                        (!station_ids.count(leg.from) ? leg.from : leg.to) +
                        "'");
      }
      if (!link_index.count({leg.from, leg.to})) {
        throw Error(ErrorKind::kUnknownLink, "train " + train.id +
                                                 " traverses undeclared link " +
                                                 leg.from + "->" + leg.to);
      }
    }

    if (train.travel_times.size() != train.route.size()) {
      std::ostringstream detail;
      detail << train.travel_times.size() << " times for "
             << train.route.size() << " legs";
      report.train_violations.push_back(
          {TrainViolationKind::kTravelTimeCountMismatch, train.id,
           detail.str()});
    } else {
      for (std::size_t i = 0; i < train.travel_times.size(); ++i) {
        if (!(train.travel_times[i] > 0.0)) {
          report.train_violations.push_back(
              {TrainViolationKind::kNonPositiveTravelTime, train.id,
               "leg " + train.route[i].from + "->" + train.route[i].to});
        }
      }
    }

    bool contiguous = true;
    for (std::size_t i = 0; i + 1 < train.route.size(); ++i) {
      if (train.route[i].to != train.route[i + 1].from) {
        contiguous = false;
        report.train_violations.push_back(
            {TrainViolationKind::kDiscontinuousRoute, train.id,
             "gap between " + train.route[i].to + " and " +
                 train.route[i + 1].from});
      }
    }
    if (contiguous) {
      std::set<std::string> visited{train.route.front().from};
      for (const auto& leg : train.route) {
        if (!visited.insert(leg.to).second) {
          report.train_violations.push_back(
              {TrainViolationKind::kRepeatedStation, train.id,
               "revisits " + leg.to});
        }
      }
    }

    for (const auto& leg : train.route) {
      ++train_counts[{leg.from, leg.to}];
    }
  }

  for (const auto& l : links) {
    auto it = train_counts.find({l.from, l.to});
    const int count = it == train_counts.end() ? 0 : it->second;
    const bool exceeded = l.infra_capacity && count > *l.infra_capacity;
    report.link_usage.push_back({l.from, l.to, count, l.infra_capacity, exceeded});
  }
  return report;
}

}  // namespace railcap
