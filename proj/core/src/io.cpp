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

#include "railcap/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "railcap/errors.hpp"
#include "csv.hpp"

namespace railcap::io_detail {

namespace {

std::string location(const std::filesystem::path& file, int line) {
  return file.filename().string() + ":" + std::to_string(line);
}

std::vector<std::string> split_line(const std::string& line,
                                    const std::filesystem::path& file,
                                    int line_no) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(c);
      }
    } else if (c == '"') {
      if (!current.empty()) {
        throw Error(ErrorKind::kParse,
                    location(file, line_no) + ": stray quote");
      }
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (quoted) {
    throw Error(ErrorKind::kParse,
                location(file, line_no) + ": unterminated quote");
  }
  fields.push_back(std::move(current));
  return fields;
}

}  // namespace

std::vector<CsvRow> read_csv(const std::filesystem::path& file,
                             const std::vector<std::string>& required,
                             const std::vector<std::string>& optional) {
  std::ifstream in(file);
  if (!in) {
    throw Error(ErrorKind::kParse, "cannot open " + file.string());
  }

  std::string line;
  int line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.size() >= 3 &&
        line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
      line.erase(0, 3);
    }
    if (line.empty()) continue;
    header = split_line(line, file, line_no);
    break;
  }
  if (header.empty()) {
    throw Error(ErrorKind::kParse, file.string() + ": missing header");
  }

  std::vector<int> positions;  // required then optional, -1 when absent
  for (const auto& name : required) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw Error(ErrorKind::kParse,
                  file.string() + ": missing column '" + name + "'");
    }
    positions.push_back(static_cast<int>(it - header.begin()));
  }
  for (const auto& name : optional) {
    auto it = std::find(header.begin(), header.end(), name);
    positions.push_back(it == header.end() ? -1
                                           : static_cast<int>(it - header.begin()));
  }

  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_line(line, file, line_no);
    CsvRow row;
    row.line = line_no;
    row.values.reserve(positions.size());
    for (int pos : positions) {
      if (pos < 0) {
        row.values.emplace_back();
      } else if (pos >= static_cast<int>(fields.size())) {
        throw Error(ErrorKind::kParse,
                    location(file, line_no) + ": too few fields");
      } else {
        row.values.push_back(fields[pos]);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double parse_double(const std::string& text, const std::filesystem::path& file,
                    int line, const std::string& column) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used == text.size() && std::isfinite(value)) return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::kParse, location(file, line) + ": bad number '" +
                                     text + "' in column " + column);
}

long long parse_int(const std::string& text, const std::filesystem::path& file,
                    int line, const std::string& column) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::kParse, location(file, line) + ": bad integer '" +
                                     text + "' in column " + column);
}

std::string csv_quote(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string format_number(double value) {
  if (value == std::floor(value) && std::abs(value) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.0f", value);
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace railcap::io_detail

namespace railcap::io {

using io_detail::CsvRow;
using io_detail::parse_double;
using io_detail::parse_int;

namespace {

std::string location(const std::filesystem::path& file, int line) {
  return file.filename().string() + ":" + std::to_string(line);
}

std::vector<OdPair> parse_demand_rows(const std::filesystem::path& file,
                                      const std::set<std::string>& station_ids) {
  std::vector<OdPair> od_pairs;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& row :
       io_detail::read_csv(file, {"origin", "destination", "demand"})) {
    const auto& origin = row.values[0];
    const auto& destination = row.values[1];
    if (!station_ids.count(origin)) {
      throw Error(ErrorKind::kReference, location(file, row.line) +
                                             ": unknown station '" + origin + "'");
    }
    if (!station_ids.count(destination)) {
      throw Error(ErrorKind::kReference,
                  location(file, row.line) + ": unknown station '" +
                      destination + "'");
    }
    if (origin == destination) {
      throw Error(ErrorKind::kParse,
                  location(file, row.line) + ": origin equals destination");
    }
    const double demand = parse_double(row.values[2], file, row.line, "demand");
    if (demand < 0.0) {
      throw Error(ErrorKind::kParse,
                  location(file, row.line) + ": negative demand");
    }
    if (!seen.insert({origin, destination}).second) {
      throw Error(ErrorKind::kDuplicateId,
                  location(file, row.line) + ": OD pair " + origin + "->" +
                      destination);
    }
    od_pairs.push_back({origin, destination, demand});
  }
  return od_pairs;
}

}  // namespace

NetworkInputs import_native(const std::filesystem::path& dir) {
  NetworkInputs inputs;
  std::set<std::string> station_ids;

  const auto stations_file = dir / "stations.csv";
  for (const auto& row : io_detail::read_csv(stations_file, {"id", "name"})) {
    if (row.values[0].empty()) {
      throw Error(ErrorKind::kParse,
                  location(stations_file, row.line) + ": empty station id");
    }
    if (!station_ids.insert(row.values[0]).second) {
      throw Error(ErrorKind::kDuplicateId,
                  location(stations_file, row.line) + ": station '" +
                      row.values[0] + "'");
    }
    inputs.stations.push_back({row.values[0], row.values[1]});
  }

  const auto links_file = dir / "links.csv";
  std::set<std::pair<std::string, std::string>> link_keys;
  for (const auto& row :
       io_detail::read_csv(links_file, {"from", "to", "infra_capacity"})) {
    const auto& from = row.values[0];
    const auto& to = row.values[1];
    for (const auto& id : {from, to}) {
      if (!station_ids.count(id)) {
        throw Error(ErrorKind::kReference, location(links_file, row.line) +
                                               ": unknown station '" + id + "'");
      }
    }
    if (from == to) {
      throw Error(ErrorKind::kParse,
                  location(links_file, row.line) + ": self-loop link");
    }
    if (!link_keys.insert({from, to}).second) {
      throw Error(ErrorKind::kDuplicateId, location(links_file, row.line) +
                                               ": link " + from + "->" + to);
    }
    std::optional<int> capacity;
    if (!row.values[2].empty()) {
      const long long value =
          parse_int(row.values[2], links_file, row.line, "infra_capacity");
      if (value < 0) {
        throw Error(ErrorKind::kParse, location(links_file, row.line) +
                                           ": negative infrastructure capacity");
      }
      capacity = static_cast<int>(value);
    }
    inputs.links.push_back({from, to, capacity});
  }

  const auto trains_file = dir / "trains.csv";
  std::map<std::string, std::size_t> train_index;
  for (const auto& row : io_detail::read_csv(trains_file, {"id", "seats"})) {
    if (row.values[0].empty()) {
      throw Error(ErrorKind::kParse,
                  location(trains_file, row.line) + ": empty train id");
    }
    const long long seats = parse_int(row.values[1], trains_file, row.line, "seats");
    if (seats < 0) {
      throw Error(ErrorKind::kParse,
                  location(trains_file, row.line) + ": negative seats");
    }
    if (train_index.count(row.values[0])) {
      throw Error(ErrorKind::kDuplicateId,
                  location(trains_file, row.line) + ": train '" + row.values[0] +
                      "'");
    }
    train_index[row.values[0]] = inputs.trains.size();
    inputs.trains.push_back({row.values[0], {}, {}, seats});
  }

  struct Stop {
    long long seq;
    std::string station;
    double arr;
    double dep;
    int line;
  };
  const auto stops_file = dir / "train_stops.csv";
  std::map<std::string, std::vector<Stop>> stops_by_train;
  std::set<std::pair<std::string, long long>> stop_keys;
  for (const auto& row : io_detail::read_csv(
           stops_file, {"train_id", "seq", "station_id", "arr_min", "dep_min"})) {
    const auto& train_id = row.values[0];
    if (!train_index.count(train_id)) {
      throw Error(ErrorKind::kReference, location(stops_file, row.line) +
                                             ": unknown train '" + train_id + "'");
    }
    if (!station_ids.count(row.values[2])) {
      throw Error(ErrorKind::kReference,
                  location(stops_file, row.line) + ": unknown station '" +
                      row.values[2] + "'");
    }
    const long long seq = parse_int(row.values[1], stops_file, row.line, "seq");
    if (!stop_keys.insert({train_id, seq}).second) {
      throw Error(ErrorKind::kDuplicateId,
                  location(stops_file, row.line) + ": stop " + train_id + "/" +
                      std::to_string(seq));
    }
    stops_by_train[train_id].push_back(
        {seq, row.values[2],
         parse_double(row.values[3], stops_file, row.line, "arr_min"),
         parse_double(row.values[4], stops_file, row.line, "dep_min"), row.line});
  }

  std::map<std::pair<std::string, std::string>, const Link*> link_lookup;
  for (const auto& link : inputs.links) link_lookup[{link.from, link.to}] = &link;

  for (auto& [train_id, stops] : stops_by_train) {
    std::sort(stops.begin(), stops.end(),
              [](const Stop& a, const Stop& b) { return a.seq < b.seq; });
    auto& train = inputs.trains[train_index[train_id]];
    for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
      const auto key = std::make_pair(stops[i].station, stops[i + 1].station);
      auto it = link_lookup.find(key);
      if (it == link_lookup.end()) {
        throw Error(ErrorKind::kReference,
                    location(stops_file, stops[i + 1].line) +
                        ": no declared link " + key.first + "->" + key.second);
      }
      train.route.push_back(*it->second);
      train.travel_times.push_back(stops[i + 1].arr - stops[i].dep);
    }
  }

  inputs.od_pairs = parse_demand_rows(dir / "demand.csv", station_ids);
  return inputs;
}

std::vector<OdPair> import_demand(const std::filesystem::path& file,
                                  const std::vector<Station>& stations) {
  std::set<std::string> ids;
  for (const auto& s : stations) ids.insert(s.id);
  return parse_demand_rows(file, ids);
}

void export_native(const NetworkInputs& inputs, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  using io_detail::csv_quote;
  using io_detail::format_number;

  {
    std::ofstream out(dir / "stations.csv");
    out << "id,name\n";
    for (const auto& s : inputs.stations) {
      out << csv_quote(s.id) << "," << csv_quote(s.name) << "\n";
    }
  }
  {
    std::ofstream out(dir / "links.csv");
    out << "from,to,infra_capacity\n";
    for (const auto& l : inputs.links) {
      out << csv_quote(l.from) << "," << csv_quote(l.to) << ",";
      if (l.infra_capacity) out << *l.infra_capacity;
      out << "\n";
    }
  }
  {
    std::ofstream out(dir / "trains.csv");
    out << "id,seats\n";
    for (const auto& t : inputs.trains) {
      out << csv_quote(t.id) << "," << t.seats << "\n";
    }
  }
  {
    std::ofstream out(dir / "train_stops.csv");
    out << "train_id,seq,station_id,arr_min,dep_min\n";
    for (const auto& t : inputs.trains) {
      if (t.route.empty()) continue;

      // Prefer a cumulative zero-dwell encoding; when floating rounding
      // would distort a travel time on re-import, fall back to writing
      // each leg's time as an offset from a zero departure, which imports
      // back difference-exactly.
      std::vector<double> arrivals(t.route.size() + 1, 0.0);
      bool exact = true;
      for (std::size_t i = 0; i < t.route.size(); ++i) {
        arrivals[i + 1] = arrivals[i] + t.travel_times[i];
        if (arrivals[i + 1] - arrivals[i] != t.travel_times[i]) exact = false;
      }

      for (std::size_t i = 0; i <= t.route.size(); ++i) {
        const std::string& station =
            i == 0 ? t.route.front().from : t.route[i - 1].to;
        double arr, dep;
        if (exact) {
          arr = arrivals[i];
          dep = arrivals[i];
        } else {
          arr = i == 0 ? 0.0 : t.travel_times[i - 1];
          dep = 0.0;
        }
        out << csv_quote(t.id) << "," << i << "," << csv_quote(station) << ","
            << format_number(arr) << "," << format_number(dep) << "\n";
      }
    }
  }
  {
    std::ofstream out(dir / "demand.csv");
    out << "origin,destination,demand\n";
    for (const auto& od : inputs.od_pairs) {
      out << csv_quote(od.origin) << "," << csv_quote(od.destination) << ","
          << format_number(od.demand) << "\n";
    }
  }
}

}  // namespace railcap::io
