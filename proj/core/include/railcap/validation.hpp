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

#ifndef RAILCAP_VALIDATION_HPP_
#define RAILCAP_VALIDATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "railcap/types.hpp"

namespace railcap {

enum class TrainViolationKind {
  kEmptyRoute,
  kDiscontinuousRoute,
  kRepeatedStation,
  kTravelTimeCountMismatch,
  kNonPositiveTravelTime,
};

std::string to_string(TrainViolationKind kind);

struct TrainViolation {
  TrainViolationKind kind;
  std::string train_id;
  std::string detail;
};

/// Per-link train counts; `exceeded` is set when a bounded link carries
/// more trains than its infrastructure capacity allows.
struct LinkUsage {
  std::string from;
  std::string to;
  int serving_trains = 0;
  std::optional<int> infra_capacity;
  bool exceeded = false;
};

struct ValidationReport {
  std::vector<TrainViolation> train_violations;
  std::vector<LinkUsage> link_usage;

  bool admissible() const;
  int capacity_violations() const;
  std::string summary() const;
};

/// Checks the fixed timetable: every route must be a contiguous simple
/// chain of known links, travel times must be positive and aligned with
/// the route, and bounded links may not carry more trains than their
/// infrastructure capacity. Model violations land in the report; dangling
/// station/link references throw Error(kUnknownStation / kUnknownLink).
ValidationReport validate_timetable(const std::vector<Station>& stations,
                                    const std::vector<Link>& links,
                                    const std::vector<Train>& trains);

inline ValidationReport validate_timetable(const NetworkInputs& inputs) {
  return validate_timetable(inputs.stations, inputs.links, inputs.trains);
}

}  // namespace railcap

#endif  // RAILCAP_VALIDATION_HPP_
