#include "cyclicap/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace cyclicap {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kRatioTieTol = 1e-12;
constexpr double kPhase1Tol = 1e-7;

// Free variables are split x = u - w with u, w >= 0; one slack per row.
// Rows with negative rhs are negated and get an artificial variable, so the
// initial basis is always feasible. Column layout:
//   [ u_0..u_{n-1} | w_0..w_{n-1} | s_0..s_{m-1} | artificials ]
struct Tableau {
  int m = 0;      // constraint rows
  int cols = 0;   // columns excluding rhs
  std::vector<double> cells;  // (m+1) x (cols+1); row m is the reduced-cost row
  std::vector<int> basis;

  double& at(int r, int c) { return cells[static_cast<std::size_t>(r) * (cols + 1) + c]; }
  double at(int r, int c) const { return cells[static_cast<std::size_t>(r) * (cols + 1) + c]; }

  void pivot(int pr, int pc) {
    const double pv = at(pr, pc);
    for (int c = 0; c <= cols; ++c) at(pr, c) /= pv;
    at(pr, pc) = 1.0;
    for (int r = 0; r <= m; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (int c = 0; c <= cols; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis[pr] = pc;
  }

  // Bland's rule. Returns Optimal when no reduced cost improves, Unbounded
  // when an improving column has no positive entry. `limit` caps the column
  // range eligible to enter (used to bar artificial columns).
  LpStatus run(int limit) {
    const long max_iter = 20000 + 200L * (m + cols);
    for (long iter = 0; iter < max_iter; ++iter) {
      int enter = -1;
      for (int c = 0; c < limit; ++c) {
        if (at(m, c) < -kPivotTol) { enter = c; break; }
      }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      double best = 0.0;
      for (int r = 0; r < m; ++r) {
        const double coef = at(r, enter);
        if (coef <= kPivotTol) continue;
        const double ratio = at(r, cols) / coef;
        if (leave < 0 || ratio < best - kRatioTieTol ||
            (ratio <= best + kRatioTieTol && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
    throw std::runtime_error("simplex: iteration limit exceeded");
  }

  // Rebuilds the reduced-cost row for column costs `cost`:
  //   at(m, j) = sum_i cost[basis_i] * at(i, j) - cost[j],  rhs cell = objective value.
  void set_objective(std::span<const double> cost) {
    for (int c = 0; c <= cols; ++c) {
      double z = 0.0;
      for (int r = 0; r < m; ++r) {
        const double cb = cost[basis[r]];
        if (cb != 0.0) z += cb * at(r, c);
      }
      at(m, c) = z - (c < cols ? cost[c] : 0.0);
    }
    // rhs column carries the plain objective value
    double v = 0.0;
    for (int r = 0; r < m; ++r) {
      const double cb = cost[basis[r]];
      if (cb != 0.0) v += cb * at(r, cols);
    }
    at(m, cols) = v;
  }
};

}  // namespace

std::string_view to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

LpResult simplex_max(std::span<const double> objective,
                     const std::vector<std::vector<double>>& rows,
                     std::span<const double> rhs) {
  const int n = static_cast<int>(objective.size());
  const int m = static_cast<int>(rows.size());

  if (m == 0) {
    for (double c : objective) {
      if (c != 0.0) return LpResult{LpStatus::Unbounded};
    }
    LpResult res{LpStatus::Optimal, 0.0};
    res.witness.assign(n, 0.0);
    return res;
  }

  std::vector<char> flipped(m, 0);
  int n_art = 0;
  for (int i = 0; i < m; ++i) {
    if (rhs[i] < 0.0) { flipped[i] = 1; ++n_art; }
  }

  const int slack0 = 2 * n;
  const int art0 = slack0 + m;
  Tableau t;
  t.m = m;
  t.cols = art0 + n_art;
  t.cells.assign(static_cast<std::size_t>(m + 1) * (t.cols + 1), 0.0);
  t.basis.assign(m, 0);

  int art = art0;
  for (int i = 0; i < m; ++i) {
    const double sign = flipped[i] ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) {
      const double v = sign * rows[i][j];
      t.at(i, j) = v;
      t.at(i, n + j) = -v;
    }
    t.at(i, slack0 + i) = sign;
    t.at(i, t.cols) = sign * rhs[i];
    if (flipped[i]) {
      t.at(i, art) = 1.0;
      t.basis[i] = art++;
    } else {
      t.basis[i] = slack0 + i;
    }
  }

  if (n_art > 0) {
    std::vector<double> cost1(t.cols, 0.0);
    for (int c = art0; c < t.cols; ++c) cost1[c] = -1.0;
    t.set_objective(cost1);
    t.run(t.cols);  // bounded above by 0, never Unbounded
    if (t.at(t.m, t.cols) < -kPhase1Tol) return LpResult{LpStatus::Infeasible};

    // Drive leftover artificials out of the basis; rows that cannot pivot
    // are dependent 0 = 0 rows and are deleted. Deletion shifts only the
    // constraint rows; the cost row is rebuilt from scratch below.
    for (int r = t.m - 1; r >= 0; --r) {
      if (t.basis[r] < art0) continue;
      int pc = -1;
      for (int c = 0; c < art0; ++c) {
        if (std::fabs(t.at(r, c)) > kPivotTol) { pc = c; break; }
      }
      if (pc >= 0) {
        t.pivot(r, pc);
      } else {
        for (int rr = r; rr + 1 < t.m; ++rr) {
          for (int c = 0; c <= t.cols; ++c) t.at(rr, c) = t.at(rr + 1, c);
          t.basis[rr] = t.basis[rr + 1];
        }
        --t.m;
        t.basis.pop_back();
      }
    }
  }

  std::vector<double> cost2(t.cols, 0.0);
  for (int j = 0; j < n; ++j) {
    cost2[j] = objective[j];
    cost2[n + j] = -objective[j];
  }
  t.set_objective(cost2);
  const LpStatus status = t.run(art0);
  if (status == LpStatus::Unbounded) return LpResult{LpStatus::Unbounded};

  LpResult res;
  res.status = LpStatus::Optimal;
  std::vector<double> col_val(t.cols, 0.0);
  for (int r = 0; r < t.m; ++r) col_val[t.basis[r]] = t.at(r, t.cols);
  res.witness.resize(n);
  double value = 0.0;
  for (int j = 0; j < n; ++j) {
    res.witness[j] = col_val[j] - col_val[n + j];
    value += objective[j] * res.witness[j];
  }
  res.value = value;
  res.dual.resize(m);
  for (int i = 0; i < m; ++i) res.dual[i] = t.at(t.m, slack0 + i);
  return res;
}

}  // namespace cyclicap
