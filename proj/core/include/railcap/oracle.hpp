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

#ifndef RAILCAP_ORACLE_HPP_
#define RAILCAP_ORACLE_HPP_

#include <limits>

#include "railcap/master.hpp"

namespace railcap {

/// Size guards for the exhaustive reference solver. The defaults keep it
/// on instances where full path enumeration is obviously safe; tests may
/// pass wider limits explicitly.
struct OracleLimits {
  int max_stations = 10;
  int max_arcs = 20;
};

struct OracleResult {
  FlowSolution solution;
  MasterProblem problem;  // full enumerated column set
};

/// Reference solver for small instances: enumerates every simple path per
/// OD pair (up to path_length_cap arcs), then solves the complete LP with
/// a dense tableau simplex in exact rational arithmetic (Bland's rule, no
/// tolerances). Entirely independent of the floating-point master and of
/// the pricing heuristics. Throws Error(kInstanceTooLarge) when the
/// instance exceeds the limits.
OracleResult oracle_solve(const ServiceNetwork& network,
                          int path_length_cap = std::numeric_limits<int>::max(),
                          const OracleLimits& limits = {},
                          bool inverse_cost_objective = true);

/// Enumerates all simple paths from origin to destination with at most
/// path_length_cap arcs, ordered by (cost, station sequence). Exposed for
/// the test suites, which use it as a search oracle as well.
std::vector<PassengerPath> enumerate_simple_paths(const ServiceNetwork& network,
                                                  int origin, int destination,
                                                  int path_length_cap);

}  // namespace railcap

#endif  // RAILCAP_ORACLE_HPP_
