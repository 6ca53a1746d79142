#pragma once

#include <string_view>
#include <vector>

#include "cyclicap/channel.hpp"
#include "cyclicap/inequality_system.hpp"
#include "cyclicap/parallel.hpp"

namespace cyclicap {

/// Row of an elimination system. Combined rows record the indices of the
/// two rows of the immediately preceding system they were formed from;
/// rows carried over unchanged record their input index in parent_a;
/// rows of the initial system carry (-1, -1).
struct FmRow {
  std::vector<int> coeffs;
  double rhs = 0.0;
  int parent_a = -1;
  int parent_b = -1;
  friend bool operator==(const FmRow&, const FmRow&) = default;
};

struct FmSystem {
  std::vector<std::string> vars;  // R_1..R_K followed by the remaining T_i
  std::vector<FmRow> rows;
  friend bool operator==(const FmSystem&, const FmSystem&) = default;
};

/// Per-receiver constraints on (R_i, T_i, T_{i+1}) after substituting the
/// private rate S_i = R_i - T_i:
///   R_i - T_i <= a_i          R_i <= d_i
///   R_i - T_i + T_{i+1} <= e_i  R_i + T_{i+1} <= g_i
///   -R_i + T_i <= 0           -T_i <= 0       -R_i <= 0
/// 7k rows over the 2k variables R_1..R_k, T_1..T_k.
FmSystem polymatroid_system(const HkParams& hk, int k);

/// One Fourier-Motzkin step: drops `var` from the system, combining every
/// (positive, negative) coefficient row pair. Rows reducing to
/// 0 <= nonnegative-constant are discarded; combined rows are sorted
/// canonically, so the output is deterministic.
FmSystem eliminate_variable(const FmSystem& sys, std::string_view var);

/// LP-certified redundancy removal (same engine as region pruning). The
/// per-call LPs are microseconds; sweeps parallelize across instances
/// instead, so the serial path is the default (see bench/).
FmSystem remove_redundant(const FmSystem& sys, Exec exec = Exec::Seq);

/// Full projection: eliminate T_1..T_k in order with redundancy removal
/// after each step, returning the system over R_1..R_k with rows tagged by
/// their recovered family.
InequalitySystem project_to_rates(const HkParams& hk, int k, Exec exec = Exec::Seq);

/// Reinterprets a fully projected system over the rate variables,
/// classifying each row into the standard region families.
InequalitySystem to_inequality_system(const FmSystem& sys);

}  // namespace cyclicap
