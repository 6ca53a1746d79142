#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace cyclicap {

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string_view to_string(LpStatus s);

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;
  std::vector<double> witness;  // primal solution, set when Optimal
  std::vector<double> dual;     // one multiplier per input row, set when Optimal
};

/// Maximizes objective . x subject to rows[i] . x <= rhs[i] over free x.
/// Dense two-phase tableau simplex with Bland's rule: the pivot sequence is
/// a pure function of the input, so results are bit-reproducible.
LpResult simplex_max(std::span<const double> objective,
                     const std::vector<std::vector<double>>& rows,
                     std::span<const double> rhs);

}  // namespace cyclicap
