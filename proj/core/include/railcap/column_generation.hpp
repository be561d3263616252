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

#ifndef RAILCAP_COLUMN_GENERATION_HPP_
#define RAILCAP_COLUMN_GENERATION_HPP_

#include <vector>

#include "railcap/master.hpp"

namespace railcap {

struct CgConfig {
  SolverConfig master;
  PricingConfig pricing;
  int max_rounds = 50;

  /// Convenience preset that makes pricing exhaustive on small instances
  /// (no detour cap, deep k-shortest enumeration, generous round budget).
  static CgConfig exhaustive();
};

struct CgRound {
  double objective = 0.0;
  int columns_added = 0;
};

struct CgTrace {
  std::vector<CgRound> rounds;
  std::vector<int> unroutable;     // OD indices with no path at all
  bool round_budget_exhausted = false;
  int total_columns = 0;
};

struct CgResult {
  FlowSolution solution;
  MasterProblem problem;  // final column set the solution refers to
  CgTrace trace;
};

/// Alternates master solves and path pricing until no improving path is
/// found (or the round budget runs out, which is recorded as a warning in
/// the trace, not an error). The per-round master objective is
/// non-decreasing. Demands and capacities come from the network.
CgResult solve_with_column_generation(const ServiceNetwork& network,
                                      const CgConfig& config = {});

}  // namespace railcap

#endif  // RAILCAP_COLUMN_GENERATION_HPP_
