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

#ifndef RAILCAP_ERRORS_HPP_
#define RAILCAP_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace railcap {

enum class ErrorKind {
  kUnknownStation,
  kUnknownLink,
  kEmptyTimetable,
  kNegativeCapacity,
  kParse,
  kReference,
  kDuplicateId,
  kNonMonotoneStopTimes,
  kNumericalFailure,
  kInstanceTooLarge,
  kUnknownPolicy,
  kConfig,
  kInvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for all recoverable failures; the kind tells
/// callers (and the CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnknownStation: return "UnknownStation";
    case ErrorKind::kUnknownLink: return "UnknownLink";
    case ErrorKind::kEmptyTimetable: return "EmptyTimetable";
    case ErrorKind::kNegativeCapacity: return "NegativeCapacity";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kReference: return "ReferenceError";
    case ErrorKind::kDuplicateId: return "DuplicateId";
    case ErrorKind::kNonMonotoneStopTimes: return "NonMonotoneStopTimes";
    case ErrorKind::kNumericalFailure: return "NumericalFailure";
    case ErrorKind::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::kUnknownPolicy: return "UnknownPolicy";
    case ErrorKind::kConfig: return "ConfigError";
    case ErrorKind::kInvalidInput: return "InvalidInput";
  }
  return "Error";
}

}  // namespace railcap

#endif  // RAILCAP_ERRORS_HPP_
