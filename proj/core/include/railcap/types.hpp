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

#ifndef RAILCAP_TYPES_HPP_
#define RAILCAP_TYPES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace railcap {

struct Station {
  std::string id;    // opaque token, unique within a network
  std::string name;  // display string

  friend bool operator==(const Station&, const Station&) = default;
};

/// Directed infrastructure section between two stations. infra_capacity is
/// the maximum number of trains per peak hour; empty means unbounded (the
/// capacity check is skipped for such links).
struct Link {
  std::string from;
  std::string to;
  std::optional<int> infra_capacity;

  friend bool operator==(const Link&, const Link&) = default;
};

/// A scheduled train run within the peak hour: an ordered chain of links
/// plus per-link travel minutes and the seats it offers.
struct Train {
  std::string id;
  std::vector<Link> route;          // consecutive links share a station
  std::vector<double> travel_times; // minutes, one per route link, > 0
  std::int64_t seats = 0;

  friend bool operator==(const Train&, const Train&) = default;
};

struct OdPair {
  std::string origin;
  std::string destination;
  double demand = 0.0;  // passengers per peak hour

  friend bool operator==(const OdPair&, const OdPair&) = default;
};

/// The full in-memory model a run starts from.
struct NetworkInputs {
  std::vector<Station> stations;
  std::vector<Link> links;
  std::vector<Train> trains;
  std::vector<OdPair> od_pairs;

  friend bool operator==(const NetworkInputs&, const NetworkInputs&) = default;
};

/// Per-train seat-capacity setting. Normal service offers 1000 seats per
/// train; distancing service 200. Custom regimes either scale the rolling
/// stock's own seat count or pin it to a fixed value.
struct CapacityRegime {
  enum class Kind { kNormal, kCovid, kScale, kFixed };

  Kind kind = Kind::kNormal;
  double scale = 1.0;         // used when kind == kScale
  std::int64_t fixed = 0;     // used when kind == kFixed

  static CapacityRegime normal() { return {Kind::kNormal, 1.0, 0}; }
  static CapacityRegime covid() { return {Kind::kCovid, 1.0, 0}; }
  static CapacityRegime scaled(double s) { return {Kind::kScale, s, 0}; }
  static CapacityRegime fixed_seats(std::int64_t n) { return {Kind::kFixed, 1.0, n}; }

  friend bool operator==(const CapacityRegime&, const CapacityRegime&) = default;
};

constexpr std::int64_t kNormalSeatsPerTrain = 1000;
constexpr std::int64_t kCovidSeatsPerTrain = 200;
constexpr double kDefaultDemandThreshold = 100.0;

std::string to_string(const CapacityRegime& regime);

/// Parses "normal", "covid", "scale=X" or "seats=N". Throws
/// Error(kConfig) on anything else.
CapacityRegime parse_regime(const std::string& text);

}  // namespace railcap

#endif  // RAILCAP_TYPES_HPP_
