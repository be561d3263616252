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

#ifndef RAILCAP_MASTER_HPP_
#define RAILCAP_MASTER_HPP_

#include <string>
#include <vector>

#include "railcap/path_engine.hpp"

namespace railcap {

/// Restricted master problem over the currently generated paths:
///
///   maximize   sum_k sum_p w_p^k f_p^k        w = d_k / c_p (default)
///   subject to sum_p f_p^k           <= 1     per OD pair
///              sum δ d_k f_p^k       <= cap   per service arc
///              f >= 0
struct MasterProblem {
  std::vector<double> demands;         // by OD index
  std::vector<double> arc_capacities;  // by arc index
  std::vector<std::vector<PassengerPath>> columns;  // columns[k]
};

MasterProblem make_master_problem(const ServiceNetwork& network,
                                  std::vector<std::vector<PassengerPath>> columns);

struct SolverConfig {
  double reduced_cost_tol = 1e-9;
  double pivot_tol = 1e-10;
  double feasibility_tol = 1e-9;
  double certification_tol = 1e-8;
  int degenerate_switch = 30;   // consecutive degenerate pivots before Bland
  int refactor_interval = 100;  // pivots between basis refactorizations
  // Objective weight: d_k / c_p when true (the default), plain d_k when
  // false (sensitivity-study alternative).
  bool inverse_cost_objective = true;
};

struct FlowSolution {
  std::vector<std::vector<double>> shares;  // aligned with MasterProblem::columns
  double objective = 0.0;
  DualPrices duals;
  std::vector<double> arc_loads;  // by arc index, recomputed from shares
  long iterations = 0;

  double transported(const MasterProblem& problem) const;
  bool empty() const { return shares.empty(); }
};

/// Solves the restricted master with a self-contained primal simplex
/// (slack start, Dantzig pricing with a Bland anti-cycling fallback) and
/// certifies the result by complementary slackness before returning.
/// Zero-demand columns carry zero weight and keep zero shares. Throws
/// Error(kNumericalFailure) when optimality cannot be certified.
FlowSolution solve_master(const MasterProblem& problem,
                          const SolverConfig& config = {});

/// Independent feasibility/optimality audit used by the test suites:
/// share bounds, per-OD share sums, arc capacities, load recomputation and
/// the weak-duality bound. Returns human-readable violations, empty when
/// the solution checks out.
std::vector<std::string> verify_flow_solution(const MasterProblem& problem,
                                              const FlowSolution& solution,
                                              double share_tol = 1e-9,
                                              double duality_tol = 1e-6,
                                              bool inverse_cost_objective = true);

}  // namespace railcap

#endif  // RAILCAP_MASTER_HPP_
