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

#ifndef RAILCAP_SRC_SIMPLEX_HPP_
#define RAILCAP_SRC_SIMPLEX_HPP_

#include <string>
#include <utility>
#include <vector>

namespace railcap::detail {

struct SparseColumn {
  std::vector<std::pair<int, double>> entries;  // (row, coefficient), coef >= 0
};

/// max c.x  s.t.  A.x <= b, x >= 0, with b >= 0 so the slack basis is
/// feasible and no phase-1 is needed.
struct PackingLp {
  int rows = 0;
  std::vector<double> rhs;
  std::vector<SparseColumn> columns;
  std::vector<double> objective;
};

struct SimplexOptions {
  double reduced_cost_tol = 1e-9;
  double pivot_tol = 1e-10;
  int degenerate_switch = 30;
  int refactor_interval = 100;
  long max_iterations = 0;  // 0: derived from the instance size
};

struct SimplexOutcome {
  bool optimal = false;
  std::string failure;
  std::vector<double> x;      // structural variable values
  std::vector<double> duals;  // row duals, as computed (not clamped)
  double objective = 0.0;
  long iterations = 0;
};

/// Primal revised simplex from the slack basis with an explicit dense
/// basis inverse: Dantzig pricing, smallest-index tie-breaking, and a
/// permanent switch to Bland's rule after a run of degenerate pivots.
SimplexOutcome solve_packing_lp(const PackingLp& lp, const SimplexOptions& options);

}  // namespace railcap::detail

#endif  // RAILCAP_SRC_SIMPLEX_HPP_
