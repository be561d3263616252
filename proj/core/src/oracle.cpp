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

#include "railcap/oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>

#include "railcap/errors.hpp"

namespace railcap {

namespace {

// Dense tableau simplex over exact rationals, Bland's rule throughout.
// max c.x s.t. A.x <= b, x >= 0 with b >= 0. Row 0 of the tableau is the
// objective row in reduced-cost form; rows 1..m hold the constraints with
// slack columns appended.
class RationalSimplex {
 public:
  RationalSimplex(int rows, int cols)
      : m_(rows), n_(cols), tableau_(rows + 1, std::vector<mpq_class>(cols + rows + 1, 0)),
        basis_(rows) {
    for (int i = 0; i < m_; ++i) basis_[i] = n_ + i;
  }

  void set_objective(int col, const mpq_class& coef) { tableau_[0][col] = -coef; }
  void set_coefficient(int row, int col, const mpq_class& coef) {
    tableau_[row + 1][col] = coef;
  }
  void set_rhs(int row, const mpq_class& value) { tableau_[row + 1].back() = value; }

  bool solve(long max_pivots) {
    for (int i = 0; i < m_; ++i) tableau_[i + 1][n_ + i] = 1;
    for (long pivots = 0; pivots < max_pivots; ++pivots) {
      int entering = -1;
      for (int j = 0; j < n_ + m_; ++j) {
        if (tableau_[0][j] < 0) {  // positive reduced cost
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      int leave = -1;
      mpq_class best_ratio;
      for (int i = 0; i < m_; ++i) {
        const mpq_class& a = tableau_[i + 1][entering];
        if (a <= 0) continue;
        mpq_class ratio = tableau_[i + 1].back() / a;
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          best_ratio = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;  // unbounded; cannot happen here
      pivot(leave, entering);
    }
    return false;
  }

  mpq_class objective() const { return tableau_[0].back(); }

  mpq_class primal_value(int col) const {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] == col) return tableau_[i + 1].back();
    }
    return 0;
  }

  // Dual of row r: the objective-row entry under that row's slack column.
  mpq_class dual_value(int row) const { return tableau_[0][n_ + row]; }

 private:
  void pivot(int leave, int entering) {
    auto& row = tableau_[leave + 1];
    const mpq_class p = row[entering];
    for (auto& v : row) v /= p;
    for (int i = 0; i <= m_; ++i) {
      if (i == leave + 1) continue;
      const mpq_class f = tableau_[i][entering];
      if (f == 0) continue;
      auto& target = tableau_[i];
      for (std::size_t j = 0; j < target.size(); ++j) {
        if (row[j] != 0) target[j] -= f * row[j];
      }
    }
    basis_[leave] = entering;
  }

  int m_;
  int n_;
  std::vector<std::vector<mpq_class>> tableau_;
  std::vector<int> basis_;
};

}  // namespace

std::vector<PassengerPath> enumerate_simple_paths(const ServiceNetwork& network,
                                                  int origin, int destination,
                                                  int path_length_cap) {
  std::vector<PassengerPath> paths;
  if (origin == destination) return paths;
  std::vector<bool> visited(network.stations().size(), false);
  std::vector<int> arc_stack;

  std::function<void(int)> dfs = [&](int u) {
    if (u == destination) {
      PassengerPath path;
      path.arcs = arc_stack;
      for (int a : arc_stack) path.cost += network.arcs()[a].cost_minutes;
      paths.push_back(std::move(path));
      return;
    }
    if (static_cast<int>(arc_stack.size()) >= path_length_cap) return;
    for (int a : network.outgoing(u)) {
      const int v = network.arcs()[a].to;
      if (visited[v]) continue;
      visited[v] = true;
      arc_stack.push_back(a);
      dfs(v);
      arc_stack.pop_back();
      visited[v] = false;
    }
  };

  visited[origin] = true;
  dfs(origin);

  std::sort(paths.begin(), paths.end(),
            [](const PassengerPath& a, const PassengerPath& b) {
              if (a.cost != b.cost) return a.cost < b.cost;
              return a.arcs < b.arcs;
            });
  return paths;
}

OracleResult oracle_solve(const ServiceNetwork& network, int path_length_cap,
                          const OracleLimits& limits, bool inverse_cost_objective) {
  if (static_cast<int>(network.stations().size()) > limits.max_stations ||
      static_cast<int>(network.arcs().size()) > limits.max_arcs) {
    throw Error(ErrorKind::kInstanceTooLarge,
                std::to_string(network.stations().size()) + " stations / " +
                    std::to_string(network.arcs().size()) + " arcs exceed the "
                    "enumeration guard");
  }

  OracleResult result;
  std::vector<std::vector<PassengerPath>> columns(network.od_pairs().size());
  for (std::size_t k = 0; k < network.od_pairs().size(); ++k) {
    const auto& od = network.od_pairs()[k];
    const int o = network.station_index(od.origin);
    const int d = network.station_index(od.destination);
    if (o < 0 || d < 0) {
      throw Error(ErrorKind::kUnknownStation, od.origin + "->" + od.destination);
    }
    columns[k] = enumerate_simple_paths(network, o, d, path_length_cap);
    for (auto& path : columns[k]) path.od = static_cast<int>(k);
  }
  result.problem = make_master_problem(network, std::move(columns));

  const auto& problem = result.problem;
  const int num_ods = static_cast<int>(problem.demands.size());
  const int num_arcs = static_cast<int>(problem.arc_capacities.size());

  auto& solution = result.solution;
  solution.shares.resize(num_ods);
  for (int k = 0; k < num_ods; ++k) {
    solution.shares[k].assign(problem.columns[k].size(), 0.0);
  }
  solution.duals.od_duals.assign(num_ods, 0.0);
  solution.duals.arc_duals.assign(num_arcs, 0.0);
  solution.arc_loads.assign(num_arcs, 0.0);

  struct Ref {
    int od;
    int path;
  };
  std::vector<Ref> refs;
  for (int k = 0; k < num_ods; ++k) {
    if (problem.demands[k] <= 0.0) continue;
    for (std::size_t p = 0; p < problem.columns[k].size(); ++p) {
      refs.push_back({k, static_cast<int>(p)});
    }
  }
  if (refs.empty()) return result;

  // Every double converts to an exact rational, so the rational LP is the
  // same LP the floating-point master sees.
  RationalSimplex simplex(num_ods + num_arcs, static_cast<int>(refs.size()));
  for (int k = 0; k < num_ods; ++k) simplex.set_rhs(k, 1);
  for (int a = 0; a < num_arcs; ++a) {
    simplex.set_rhs(num_ods + a, mpq_class(problem.arc_capacities[a]));
  }
  for (std::size_t j = 0; j < refs.size(); ++j) {
    const auto [k, p] = refs[j];
    const auto& path = problem.columns[k][p];
    const mpq_class demand(problem.demands[k]);
    mpq_class weight = demand;
    if (inverse_cost_objective) weight /= mpq_class(path.cost);
    simplex.set_objective(static_cast<int>(j), weight);
    simplex.set_coefficient(k, static_cast<int>(j), 1);
    for (int a : path.arcs) {
      simplex.set_coefficient(num_ods + a, static_cast<int>(j), demand);
    }
  }

  if (!simplex.solve(2'000'000)) {
    throw Error(ErrorKind::kNumericalFailure,
                "rational simplex did not terminate");
  }

  solution.objective = simplex.objective().get_d();
  for (std::size_t j = 0; j < refs.size(); ++j) {
    const auto [k, p] = refs[j];
    solution.shares[k][p] = simplex.primal_value(static_cast<int>(j)).get_d();
  }
  for (int k = 0; k < num_ods; ++k) {
    solution.duals.od_duals[k] = simplex.dual_value(k).get_d();
  }
  for (int a = 0; a < num_arcs; ++a) {
    solution.duals.arc_duals[a] = simplex.dual_value(num_ods + a).get_d();
  }
  for (int k = 0; k < num_ods; ++k) {
    for (std::size_t p = 0; p < problem.columns[k].size(); ++p) {
      const double flow = problem.demands[k] * solution.shares[k][p];
      if (flow == 0.0) continue;
      for (int a : problem.columns[k][p].arcs) solution.arc_loads[a] += flow;
    }
  }
  return result;
}

}  // namespace railcap
