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

#include "simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace railcap::detail {

namespace {

class Simplex {
 public:
  Simplex(const PackingLp& lp, const SimplexOptions& options)
      : lp_(lp),
        opt_(options),
        m_(lp.rows),
        n_(static_cast<int>(lp.columns.size())),
        basic_(m_),
        is_basic_(n_ + m_, false),
        xb_(lp.rhs),
        binv_(static_cast<std::size_t>(m_) * m_, 0.0) {
    for (int i = 0; i < m_; ++i) {
      basic_[i] = n_ + i;  // slack basis
      is_basic_[n_ + i] = true;
      binv_[idx(i, i)] = 1.0;
    }
  }

  SimplexOutcome run() {
    SimplexOutcome out;
    const long budget = opt_.max_iterations > 0
                            ? opt_.max_iterations
                            : 2000 + 200L * (m_ + n_);
    bool bland = false;
    int degenerate_run = 0;
    int pivots_since_refactor = 0;

    std::vector<double> y(m_);
    std::vector<double> w(m_);

    while (true) {
      if (out.iterations++ > budget) {
        out.failure = "iteration budget exhausted";
        return out;
      }
      compute_duals(y);
      const int entering = choose_entering(y, bland);
      if (entering < 0) break;  // no improving column: optimal

      direction(entering, w);
      int leave_row = -1;
      double theta = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        if (w[i] <= opt_.pivot_tol) continue;
        const double ratio = std::max(xb_[i], 0.0) / w[i];
        if (ratio < theta - 1e-15 ||
            (ratio <= theta + 1e-15 &&
             (leave_row < 0 || basic_[i] < basic_[leave_row]))) {
          theta = ratio;
          leave_row = i;
        }
      }
      if (leave_row < 0) {
        // Cannot happen for a packing LP whose columns all touch a row,
        // so treat it as numerical breakdown rather than unboundedness.
        out.failure = "no blocking row (numerically unbounded)";
        return out;
      }

      if (theta <= 1e-13) {
        if (++degenerate_run >= opt_.degenerate_switch) bland = true;
      } else {
        degenerate_run = 0;
      }

      pivot(entering, leave_row, theta, w);
      if (++pivots_since_refactor >= opt_.refactor_interval) {
        if (!refactor()) {
          out.failure = "singular basis during refactorization";
          return out;
        }
        pivots_since_refactor = 0;
      }
    }

    // Recompute everything from a fresh factorization before reporting.
    if (!refactor()) {
      SimplexOutcome out2;
      out2.iterations = out.iterations;
      out2.failure = "singular basis at optimum";
      return out2;
    }
    compute_duals(y);
    out.duals = y;
    out.x.assign(n_, 0.0);
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] < n_) out.x[basic_[i]] = xb_[i];
    }
    out.objective = 0.0;
    for (int j = 0; j < n_; ++j) out.objective += lp_.objective[j] * out.x[j];
    out.optimal = true;
    return out;
  }

 private:
  std::size_t idx(int row, int col) const {
    return static_cast<std::size_t>(row) * m_ + col;
  }

  double objective_of(int var) const {
    return var < n_ ? lp_.objective[var] : 0.0;
  }

  // y = c_B * B^{-1}
  void compute_duals(std::vector<double>& y) const {
    std::fill(y.begin(), y.end(), 0.0);
    for (int i = 0; i < m_; ++i) {
      const double c = objective_of(basic_[i]);
      if (c == 0.0) continue;
      for (int r = 0; r < m_; ++r) y[r] += c * binv_[idx(i, r)];
    }
  }

  double reduced_cost(int var, const std::vector<double>& y) const {
    if (var < n_) {
      double rc = lp_.objective[var];
      for (const auto& [row, coef] : lp_.columns[var].entries) {
        rc -= y[row] * coef;
      }
      return rc;
    }
    return -y[var - n_];
  }

  int choose_entering(const std::vector<double>& y, bool bland) const {
    int best = -1;
    double best_rc = opt_.reduced_cost_tol;
    for (int var = 0; var < n_ + m_; ++var) {
      if (is_basic_[var]) continue;
      const double rc = reduced_cost(var, y);
      if (rc <= opt_.reduced_cost_tol) continue;
      if (bland) return var;  // smallest improving index
      if (rc > best_rc) {
        best_rc = rc;
        best = var;
      }
    }
    return best;
  }

  // w = B^{-1} * A_entering
  void direction(int var, std::vector<double>& w) const {
    std::fill(w.begin(), w.end(), 0.0);
    if (var < n_) {
      for (const auto& [row, coef] : lp_.columns[var].entries) {
        for (int i = 0; i < m_; ++i) w[i] += binv_[idx(i, row)] * coef;
      }
    } else {
      const int row = var - n_;
      for (int i = 0; i < m_; ++i) w[i] = binv_[idx(i, row)];
    }
  }

  void pivot(int entering, int leave_row, double theta,
             const std::vector<double>& w) {
    for (int i = 0; i < m_; ++i) {
      if (i == leave_row) continue;
      xb_[i] -= theta * w[i];
      if (xb_[i] < 0.0 && xb_[i] > -1e-12) xb_[i] = 0.0;
    }
    xb_[leave_row] = theta;

    const double piv = w[leave_row];
    for (int c = 0; c < m_; ++c) binv_[idx(leave_row, c)] /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == leave_row || w[i] == 0.0) continue;
      const double factor = w[i];
      for (int c = 0; c < m_; ++c) {
        binv_[idx(i, c)] -= factor * binv_[idx(leave_row, c)];
      }
    }

    is_basic_[basic_[leave_row]] = false;
    is_basic_[entering] = true;
    basic_[leave_row] = entering;
  }

  // Rebuilds B^{-1} by Gauss-Jordan with partial pivoting and recomputes
  // the basic solution from it.
  bool refactor() {
    std::vector<double> mat(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      const int var = basic_[i];
      if (var < n_) {
        for (const auto& [row, coef] : lp_.columns[var].entries) {
          mat[idx(row, i)] = coef;
        }
      } else {
        mat[idx(var - n_, i)] = 1.0;
      }
    }
    std::vector<double> inv(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) inv[idx(i, i)] = 1.0;

    for (int col = 0; col < m_; ++col) {
      int piv_row = col;
      double piv_val = std::abs(mat[idx(col, col)]);
      for (int r = col + 1; r < m_; ++r) {
        if (std::abs(mat[idx(r, col)]) > piv_val) {
          piv_val = std::abs(mat[idx(r, col)]);
          piv_row = r;
        }
      }
      if (piv_val < 1e-14) return false;
      if (piv_row != col) {
        for (int c = 0; c < m_; ++c) {
          std::swap(mat[idx(piv_row, c)], mat[idx(col, c)]);
          std::swap(inv[idx(piv_row, c)], inv[idx(col, c)]);
        }
      }
      const double p = mat[idx(col, col)];
      for (int c = 0; c < m_; ++c) {
        mat[idx(col, c)] /= p;
        inv[idx(col, c)] /= p;
      }
      for (int r = 0; r < m_; ++r) {
        if (r == col) continue;
        const double f = mat[idx(r, col)];
        if (f == 0.0) continue;
        for (int c = 0; c < m_; ++c) {
          mat[idx(r, c)] -= f * mat[idx(col, c)];
          inv[idx(r, c)] -= f * inv[idx(col, c)];
        }
      }
    }

    // inv now maps basis-order coordinates; binv rows follow basis order
    // already, so adopt it directly and refresh xb = B^{-1} b.
    binv_ = std::move(inv);
    for (int i = 0; i < m_; ++i) {
      double v = 0.0;
      for (int r = 0; r < m_; ++r) v += binv_[idx(i, r)] * lp_.rhs[r];
      xb_[i] = v < 0.0 && v > -1e-12 ? 0.0 : v;
    }
    return true;
  }

  const PackingLp& lp_;
  const SimplexOptions& opt_;
  int m_;
  int n_;
  std::vector<int> basic_;
  std::vector<bool> is_basic_;
  std::vector<double> xb_;
  std::vector<double> binv_;
};

}  // namespace

SimplexOutcome solve_packing_lp(const PackingLp& lp, const SimplexOptions& options) {
  Simplex solver(lp, options);
  return solver.run();
}

}  // namespace railcap::detail
