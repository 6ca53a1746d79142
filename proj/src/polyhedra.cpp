#include "cyclicap/polyhedra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cyclicap/channel.hpp"

namespace cyclicap {

namespace {

std::vector<std::vector<double>> to_matrix(const InequalitySystem& sys) {
  std::vector<std::vector<double>> a;
  a.reserve(sys.rows.size());
  for (const Row& row : sys.rows) {
    a.emplace_back(row.coeffs.begin(), row.coeffs.end());
  }
  return a;
}

std::vector<double> rhs_vector(const InequalitySystem& sys) {
  std::vector<double> b;
  b.reserve(sys.rows.size());
  for (const Row& row : sys.rows) b.push_back(row.rhs);
  return b;
}

void check_same_vars(const InequalitySystem& a, const InequalitySystem& b) {
  if (a.vars != b.vars) {
    throw ValidationError(ValidationCode::LengthMismatch,
                          "regions must share one variable list");
  }
}

}  // namespace

LpResult lp_max(const InequalitySystem& sys, std::span<const double> objective) {
  if (objective.size() != sys.vars.size()) {
    throw ValidationError(ValidationCode::LengthMismatch,
                          "objective length must match variable count");
  }
  return simplex_max(objective, to_matrix(sys), rhs_vector(sys));
}

bool contains_point(const InequalitySystem& sys, std::span<const double> x,
                    double tol) {
  if (x.size() != sys.vars.size()) {
    throw ValidationError(ValidationCode::LengthMismatch,
                          "point dimension must match variable count");
  }
  for (const Row& row : sys.rows) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += row.coeffs[j] * x[j];
    if (lhs > row.rhs + tol) return false;
  }
  return true;
}

bool region_includes(const InequalitySystem& outer, const InequalitySystem& inner,
                     double tol, Exec exec) {
  check_same_vars(outer, inner);
  const auto inner_a = to_matrix(inner);
  const auto inner_b = rhs_vector(inner);
  const int n = static_cast<int>(outer.rows.size());
  std::vector<char> ok(n, 0);
  parallel_for(exec, n, [&](int i) {
    const Row& row = outer.rows[i];
    std::vector<double> obj(row.coeffs.begin(), row.coeffs.end());
    const LpResult res = simplex_max(obj, inner_a, inner_b);
    if (res.status == LpStatus::Unbounded) {
      ok[i] = 0;
    } else if (res.status == LpStatus::Infeasible) {
      ok[i] = 1;  // empty inner region is included in everything
    } else {
      ok[i] = res.value <= row.rhs + tol;
    }
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

bool regions_equal(const InequalitySystem& a, const InequalitySystem& b,
                   double tol, Exec exec) {
  return region_includes(a, b, tol, exec) && region_includes(b, a, tol, exec);
}

double certified_gap(const InequalitySystem& inner, const InequalitySystem& outer,
                     int k, Exec exec) {
  check_same_vars(inner, outer);
  if (k != static_cast<int>(inner.vars.size())) {
    throw ValidationError(ValidationCode::LengthMismatch,
                          "k must match the variable count");
  }
  const auto outer_a = to_matrix(outer);
  const auto outer_b = rhs_vector(outer);
  const int n = static_cast<int>(inner.rows.size());
  std::vector<double> gap(n, 0.0);
  std::vector<char> unbounded(n, 0);
  parallel_for(exec, n, [&](int i) {
    const Row& row = inner.rows[i];
    const int s = coeff_sum(row);
    if (s <= 0) return;
    std::vector<double> obj(row.coeffs.begin(), row.coeffs.end());
    const LpResult res = simplex_max(obj, outer_a, outer_b);
    if (res.status == LpStatus::Unbounded) {
      unbounded[i] = 1;
    } else if (res.status == LpStatus::Optimal) {
      gap[i] = (res.value - row.rhs) / s;
    }
  });
  if (std::any_of(unbounded.begin(), unbounded.end(), [](char c) { return c != 0; })) {
    throw ValidationError(ValidationCode::BadParameter,
                          "outer region is unbounded along a rate direction");
  }
  double b = 0.0;
  for (double g : gap) b = std::max(b, g);
  return b;
}

double symmetric_max(const InequalitySystem& sys, int k) {
  if (k != static_cast<int>(sys.vars.size())) {
    throw ValidationError(ValidationCode::LengthMismatch,
                          "k must match the variable count");
  }
  double best = std::numeric_limits<double>::infinity();
  for (const Row& row : sys.rows) {
    const int s = coeff_sum(row);
    if (s > 0) best = std::min(best, row.rhs / s);
  }
  return best;
}

Slice2d slice_2d(const InequalitySystem& sys, int i, int j,
                 std::span<const double> fixed) {
  const int n = static_cast<int>(sys.vars.size());
  if (i < 1 || i > n || j < 1 || j > n || i == j) {
    throw ValidationError(ValidationCode::IndexOutOfRange,
                          "slice indices must be distinct and within 1..k");
  }
  if (static_cast<int>(fixed.size()) != n - 2) {
    throw ValidationError(ValidationCode::LengthMismatch,
                          "fixed values must cover the remaining variables");
  }
  const int xi = i - 1, xj = j - 1;
  std::vector<int> rest;
  for (int t = 0; t < n; ++t) {
    if (t != xi && t != xj) rest.push_back(t);
  }

  struct Line { double a, b, c; };  // a x + b y <= c
  std::vector<Line> lines;
  Slice2d out;
  for (const Row& row : sys.rows) {
    double c = row.rhs;
    for (std::size_t t = 0; t < rest.size(); ++t) c -= row.coeffs[rest[t]] * fixed[t];
    const double a = row.coeffs[xi];
    const double b = row.coeffs[xj];
    if (a == 0.0 && b == 0.0) {
      if (c < -kFeasTol) return out;  // fixed values violate a constraint
      continue;
    }
    lines.push_back({a, b, c});
  }

  std::vector<std::array<double, 2>> pts;
  const int nl = static_cast<int>(lines.size());
  for (int p = 0; p < nl; ++p) {
    for (int q = p + 1; q < nl; ++q) {
      const double det = lines[p].a * lines[q].b - lines[q].a * lines[p].b;
      if (std::fabs(det) < 1e-12) continue;
      const double x = (lines[p].c * lines[q].b - lines[q].c * lines[p].b) / det;
      const double y = (lines[p].a * lines[q].c - lines[q].a * lines[p].c) / det;
      bool feas = true;
      for (const Line& ln : lines) {
        if (ln.a * x + ln.b * y > ln.c + 10 * kFeasTol) { feas = false; break; }
      }
      if (feas) pts.push_back({x, y});
    }
  }
  if (pts.empty()) return out;

  // dedupe, then order counterclockwise around the centroid
  std::vector<std::array<double, 2>> uniq;
  for (const auto& p : pts) {
    bool dup = false;
    for (const auto& u : uniq) {
      if (std::fabs(p[0] - u[0]) < 1e-7 && std::fabs(p[1] - u[1]) < 1e-7) {
        dup = true;
        break;
      }
    }
    if (!dup) uniq.push_back(p);
  }
  double cx = 0.0, cy = 0.0;
  for (const auto& p : uniq) { cx += p[0]; cy += p[1]; }
  cx /= static_cast<double>(uniq.size());
  cy /= static_cast<double>(uniq.size());
  std::sort(uniq.begin(), uniq.end(), [&](const auto& u, const auto& v) {
    return std::atan2(u[1] - cy, u[0] - cx) < std::atan2(v[1] - cy, v[0] - cx);
  });
  // deterministic start: lexicographically smallest vertex
  std::size_t start = 0;
  for (std::size_t t = 1; t < uniq.size(); ++t) {
    if (uniq[t] < uniq[start]) start = t;
  }
  std::rotate(uniq.begin(), uniq.begin() + start, uniq.end());

  out.vertices = std::move(uniq);
  out.feasible = true;
  return out;
}

std::vector<int> nonredundant_rows(const std::vector<std::vector<int>>& coeffs,
                                   const std::vector<double>& rhs, Exec exec) {
  const int m = static_cast<int>(coeffs.size());
  std::vector<char> active(m, 1);

  // exact duplicates / dominated parallel rows with identical coefficients
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (j == i || !active[j]) continue;
      if (coeffs[j] != coeffs[i]) continue;
      if (rhs[j] < rhs[i] || (rhs[j] == rhs[i] && j < i)) {
        active[i] = 0;
        break;
      }
    }
  }

  std::vector<std::vector<double>> a(m);
  for (int i = 0; i < m; ++i) a[i].assign(coeffs[i].begin(), coeffs[i].end());

  auto solve_against = [&](int candidate, const std::vector<char>& mask) {
    std::vector<std::vector<double>> sub_a;
    std::vector<double> sub_b;
    for (int j = 0; j < m; ++j) {
      if (j == candidate || !mask[j]) continue;
      sub_a.push_back(a[j]);
      sub_b.push_back(rhs[j]);
    }
    return simplex_max(a[candidate], sub_a, sub_b);
  };
  auto redundant = [&](const LpResult& res, int candidate) {
    return res.status == LpStatus::Optimal && res.value <= rhs[candidate] + kRedundancyTol;
  };

  if (exec == Exec::Par) {
    // Flag pass against all other rows; rows that are not redundant even
    // against the full set stay non-redundant against every subset, so only
    // flagged rows need the sequential resolution below. The kept set is
    // identical to the plain sequential sweep.
    std::vector<char> flagged(m, 0);
    std::vector<int> idx;
    for (int i = 0; i < m; ++i) {
      if (active[i]) idx.push_back(i);
    }
    const std::vector<char> initial = active;
    parallel_for(exec, static_cast<int>(idx.size()), [&](int t) {
      const int i = idx[t];
      flagged[i] = redundant(solve_against(i, initial), i);
    });
    for (int i = 0; i < m; ++i) {
      if (!active[i] || !flagged[i]) continue;
      if (redundant(solve_against(i, active), i)) active[i] = 0;
    }
  } else {
    for (int i = 0; i < m; ++i) {
      if (!active[i]) continue;
      if (redundant(solve_against(i, active), i)) active[i] = 0;
    }
  }

  std::vector<int> kept;
  for (int i = 0; i < m; ++i) {
    if (active[i]) kept.push_back(i);
  }
  return kept;
}

InequalitySystem remove_redundant_rows(const InequalitySystem& sys, Exec exec) {
  std::vector<std::vector<int>> coeffs;
  std::vector<double> rhs;
  coeffs.reserve(sys.rows.size());
  rhs.reserve(sys.rows.size());
  for (const Row& row : sys.rows) {
    coeffs.push_back(row.coeffs);
    rhs.push_back(row.rhs);
  }
  InequalitySystem out;
  out.vars = sys.vars;
  for (int i : nonredundant_rows(coeffs, rhs, exec)) out.rows.push_back(sys.rows[i]);
  return out;
}

}  // namespace cyclicap
