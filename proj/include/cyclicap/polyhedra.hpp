#pragma once

#include <array>
#include <span>
#include <vector>

#include "cyclicap/inequality_system.hpp"
#include "cyclicap/parallel.hpp"
#include "cyclicap/simplex.hpp"

namespace cyclicap {

inline constexpr double kFeasTol = 1e-9;        // point feasibility
inline constexpr double kIncludeTol = 1e-7;     // inclusion / equality
inline constexpr double kRedundancyTol = 1e-9;  // row redundancy certification

/// Maximizes objective . x over the region. Infeasible/Unbounded are
/// reported in the status, never thrown.
LpResult lp_max(const InequalitySystem& sys, std::span<const double> objective);

bool contains_point(const InequalitySystem& sys, std::span<const double> x,
                    double tol = kFeasTol);

/// True iff every row of `outer` is satisfied by all of `inner`:
/// lp_max(inner, c) <= rhs + tol row-wise. Requires identical variable lists.
bool region_includes(const InequalitySystem& outer, const InequalitySystem& inner,
                     double tol = kIncludeTol, Exec exec = Exec::Par);

bool regions_equal(const InequalitySystem& a, const InequalitySystem& b,
                   double tol = kIncludeTol, Exec exec = Exec::Par);

/// Certified per-user gap b*: the smallest uniform per-user rate reduction
/// (clamped at zero) that maps every point of `outer` into `inner`,
/// computed row-wise as max over inner rows (c, v) with positive
/// coefficient sum of (lp_max(outer, c) - v) / sum(c). Throws if `outer`
/// is unbounded along some inner row direction.
double certified_gap(const InequalitySystem& inner, const InequalitySystem& outer,
                     int k, Exec exec = Exec::Par);

/// Largest t with (t, ..., t) feasible: min over rows with positive
/// coefficient sum of rhs / sum(c).
double symmetric_max(const InequalitySystem& sys, int k);

struct Slice2d {
  std::vector<std::array<double, 2>> vertices;  // counterclockwise
  bool feasible = false;
};

/// Cross-section of the region in variables i and j (1-based), with the
/// remaining variables fixed to `fixed` (in increasing variable order).
/// Infeasible fixed values yield an empty, flagged result.
Slice2d slice_2d(const InequalitySystem& sys, int i, int j,
                 std::span<const double> fixed);

/// Redundancy engine shared by the elimination pipeline and region pruning:
/// returns the indices of rows kept after dropping every row whose removal
/// leaves the region unchanged (LP certificate at kRedundancyTol, applied
/// in row order to a fixed point). Exact (coeffs, rhs) duplicates collapse
/// to their first occurrence. Par produces the identical kept set.
std::vector<int> nonredundant_rows(const std::vector<std::vector<int>>& coeffs,
                                   const std::vector<double>& rhs, Exec exec);

/// `nonredundant_rows` applied to an InequalitySystem.
InequalitySystem remove_redundant_rows(const InequalitySystem& sys,
                                       Exec exec = Exec::Par);

}  // namespace cyclicap
