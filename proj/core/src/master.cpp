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

#include "railcap/master.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "railcap/errors.hpp"
#include "simplex.hpp"

namespace railcap {

namespace {

struct ColumnRef {
  int od;
  int path;  // index within columns[od]
};

double objective_weight(double demand, double cost, bool inverse_cost) {
  return inverse_cost ? demand / cost : demand;
}

}  // namespace

MasterProblem make_master_problem(const ServiceNetwork& network,
                                  std::vector<std::vector<PassengerPath>> columns) {
  MasterProblem problem;
  problem.demands.reserve(network.od_pairs().size());
  for (const auto& od : network.od_pairs()) problem.demands.push_back(od.demand);
  problem.arc_capacities = network.arc_capacities();
  if (columns.empty()) columns.resize(network.od_pairs().size());
  problem.columns = std::move(columns);
  return problem;
}

double FlowSolution::transported(const MasterProblem& problem) const {
  double total = 0.0;
  for (std::size_t k = 0; k < shares.size(); ++k) {
    double share_sum = 0.0;
    for (double f : shares[k]) share_sum += f;
    total += problem.demands[k] * share_sum;
  }
  return total;
}

FlowSolution solve_master(const MasterProblem& problem, const SolverConfig& config) {
  const int num_ods = static_cast<int>(problem.demands.size());
  const int num_arcs = static_cast<int>(problem.arc_capacities.size());
  if (static_cast<int>(problem.columns.size()) != num_ods) {
    throw Error(ErrorKind::kInvalidInput,
                "column sets do not match the OD count");
  }

  FlowSolution solution;
  solution.shares.resize(num_ods);
  for (int k = 0; k < num_ods; ++k) {
    solution.shares[k].assign(problem.columns[k].size(), 0.0);
  }
  solution.duals.od_duals.assign(num_ods, 0.0);
  solution.duals.arc_duals.assign(num_arcs, 0.0);
  solution.arc_loads.assign(num_arcs, 0.0);

  // Zero-demand OD pairs contribute nothing and are left out of the LP.
  detail::PackingLp lp;
  lp.rows = num_ods + num_arcs;
  lp.rhs.assign(lp.rows, 1.0);
  for (int a = 0; a < num_arcs; ++a) {
    if (problem.arc_capacities[a] < 0.0) {
      throw Error(ErrorKind::kInvalidInput, "negative arc capacity");
    }
    lp.rhs[num_ods + a] = problem.arc_capacities[a];
  }

  std::vector<ColumnRef> refs;
  for (int k = 0; k < num_ods; ++k) {
    const double demand = problem.demands[k];
    if (demand < 0.0) {
      throw Error(ErrorKind::kInvalidInput, "negative demand");
    }
    if (demand == 0.0) continue;
    for (std::size_t p = 0; p < problem.columns[k].size(); ++p) {
      const auto& path = problem.columns[k][p];
      if (!(path.cost > 0.0)) {
        throw Error(ErrorKind::kInvalidInput, "non-positive path cost");
      }
      detail::SparseColumn col;
      col.entries.emplace_back(k, 1.0);
      for (int a : path.arcs) {
        if (a < 0 || a >= num_arcs) {
          throw Error(ErrorKind::kInvalidInput, "path arc out of range");
        }
        col.entries.emplace_back(num_ods + a, demand);
      }
      lp.columns.push_back(std::move(col));
      lp.objective.push_back(
          objective_weight(demand, path.cost, config.inverse_cost_objective));
      refs.push_back({k, static_cast<int>(p)});
    }
  }

  if (lp.columns.empty()) return solution;  // nothing to route

  detail::SimplexOptions options;
  options.reduced_cost_tol = config.reduced_cost_tol;
  options.pivot_tol = config.pivot_tol;
  options.degenerate_switch = config.degenerate_switch;
  options.refactor_interval = config.refactor_interval;
  auto outcome = detail::solve_packing_lp(lp, options);
  if (!outcome.optimal) {
    throw Error(ErrorKind::kNumericalFailure,
                "master LP: " + outcome.failure + " after " +
                    std::to_string(outcome.iterations) + " iterations");
  }

  // Certify the claimed optimum: primal feasibility, dual feasibility and
  // complementary slackness, all against the raw simplex output.
  const double tol = config.certification_tol;
  std::vector<double> row_activity(lp.rows, 0.0);
  for (std::size_t j = 0; j < lp.columns.size(); ++j) {
    const double xj = outcome.x[j];
    if (xj < -tol) {
      throw Error(ErrorKind::kNumericalFailure, "negative primal value");
    }
    for (const auto& [row, coef] : lp.columns[j].entries) {
      row_activity[row] += coef * xj;
    }
  }
  const double scale = std::max(1.0, std::abs(outcome.objective));
  for (int r = 0; r < lp.rows; ++r) {
    if (row_activity[r] > lp.rhs[r] + tol * std::max(1.0, lp.rhs[r])) {
      throw Error(ErrorKind::kNumericalFailure, "primal infeasibility");
    }
    if (outcome.duals[r] < -tol) {
      throw Error(ErrorKind::kNumericalFailure, "negative dual value");
    }
    const double slack = lp.rhs[r] - row_activity[r];
    if (std::abs(outcome.duals[r] * slack) > tol * scale) {
      throw Error(ErrorKind::kNumericalFailure, "complementary slackness (row)");
    }
  }
  for (std::size_t j = 0; j < lp.columns.size(); ++j) {
    double rc = lp.objective[j];
    for (const auto& [row, coef] : lp.columns[j].entries) {
      rc -= outcome.duals[row] * coef;
    }
    if (rc > tol * std::max(1.0, std::abs(lp.objective[j]))) {
      throw Error(ErrorKind::kNumericalFailure, "dual infeasibility");
    }
    if (std::abs(rc * outcome.x[j]) > tol * scale) {
      throw Error(ErrorKind::kNumericalFailure,
                  "complementary slackness (column)");
    }
  }

  for (std::size_t j = 0; j < refs.size(); ++j) {
    solution.shares[refs[j].od][refs[j].path] =
        std::clamp(outcome.x[j], 0.0, 1.0);
  }
  for (int k = 0; k < num_ods; ++k) {
    solution.duals.od_duals[k] = std::max(outcome.duals[k], 0.0);
  }
  for (int a = 0; a < num_arcs; ++a) {
    solution.duals.arc_duals[a] = std::max(outcome.duals[num_ods + a], 0.0);
  }
  for (int k = 0; k < num_ods; ++k) {
    for (std::size_t p = 0; p < problem.columns[k].size(); ++p) {
      const double flow = problem.demands[k] * solution.shares[k][p];
      if (flow == 0.0) continue;
      for (int a : problem.columns[k][p].arcs) {
        solution.arc_loads[a] += flow;
      }
    }
  }
  solution.objective = outcome.objective;
  solution.iterations = outcome.iterations;
  return solution;
}

std::vector<std::string> verify_flow_solution(const MasterProblem& problem,
                                              const FlowSolution& solution,
                                              double share_tol,
                                              double duality_tol,
                                              bool inverse_cost_objective) {
  std::vector<std::string> violations;
  auto fail = [&](const std::string& what) { violations.push_back(what); };

  if (solution.shares.size() != problem.columns.size()) {
    fail("share vector shape mismatch");
    return violations;
  }

  std::vector<double> loads(problem.arc_capacities.size(), 0.0);
  double objective = 0.0;
  for (std::size_t k = 0; k < problem.columns.size(); ++k) {
    if (solution.shares[k].size() != problem.columns[k].size()) {
      fail("share vector shape mismatch for OD " + std::to_string(k));
      return violations;
    }
    double share_sum = 0.0;
    for (std::size_t p = 0; p < problem.columns[k].size(); ++p) {
      const double f = solution.shares[k][p];
      if (f < -share_tol || f > 1.0 + share_tol) {
        fail("share out of [0,1] for OD " + std::to_string(k));
      }
      share_sum += f;
      const double flow = problem.demands[k] * f;
      for (int a : problem.columns[k][p].arcs) loads[a] += flow;
      if (problem.demands[k] > 0.0) {
        objective += objective_weight(problem.demands[k],
                                      problem.columns[k][p].cost,
                                      inverse_cost_objective) *
                     f;
      }
    }
    if (share_sum > 1.0 + share_tol) {
      fail("share sum exceeds 1 for OD " + std::to_string(k));
    }
  }

  for (std::size_t a = 0; a < loads.size(); ++a) {
    const double cap = problem.arc_capacities[a];
    if (loads[a] > cap + share_tol * std::max(1.0, cap)) {
      fail("capacity exceeded on arc " + std::to_string(a));
    }
    const double stored = a < solution.arc_loads.size() ? solution.arc_loads[a] : -1.0;
    if (std::abs(stored - loads[a]) > 1e-9 * std::max(1.0, loads[a])) {
      fail("stored arc load differs from recomputation on arc " +
           std::to_string(a));
    }
  }

  if (std::abs(objective - solution.objective) >
      1e-6 * std::max(1.0, std::abs(solution.objective))) {
    fail("stored objective differs from recomputation");
  }

  for (double mu : solution.duals.od_duals) {
    if (mu < 0.0) fail("negative OD dual");
  }
  for (double lam : solution.duals.arc_duals) {
    if (lam < 0.0) fail("negative arc dual");
  }
  double dual_bound = 0.0;
  for (double mu : solution.duals.od_duals) dual_bound += mu;
  for (std::size_t a = 0; a < solution.duals.arc_duals.size(); ++a) {
    dual_bound += solution.duals.arc_duals[a] * problem.arc_capacities[a];
  }
  if (solution.objective >
      dual_bound + duality_tol * std::max(1.0, std::abs(dual_bound))) {
    fail("weak duality violated");
  }
  return violations;
}

}  // namespace railcap
