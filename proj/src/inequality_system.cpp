#include "cyclicap/inequality_system.hpp"

#include <algorithm>
#include <numeric>

namespace cyclicap {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Individual: return "individual";
    case Family::AdjacentSum: return "adjacent_sum";
    case Family::FullSum: return "full_sum";
    case Family::SumPlusOne: return "sum_plus_one";
    case Family::Nonneg: return "nonneg";
    case Family::Mac: return "mac";
    case Family::Box: return "box";
    case Family::Fm: return "fm";
  }
  return "fm";
}

std::optional<Family> family_from_string(std::string_view s) {
  for (Family f : {Family::Individual, Family::AdjacentSum, Family::FullSum,
                   Family::SumPlusOne, Family::Nonneg, Family::Mac, Family::Box,
                   Family::Fm}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

std::vector<std::string> rate_vars(int k) {
  std::vector<std::string> v;
  v.reserve(k);
  for (int i = 1; i <= k; ++i) v.push_back("R_" + std::to_string(i));
  return v;
}

int coeff_sum(const Row& row) {
  return std::accumulate(row.coeffs.begin(), row.coeffs.end(), 0);
}

std::size_t family_count(const InequalitySystem& sys) {
  std::vector<std::vector<int>> seen;
  for (const Row& row : sys.rows) {
    if (row.family == Family::Nonneg) continue;
    if (std::find(seen.begin(), seen.end(), row.coeffs) == seen.end()) {
      seen.push_back(row.coeffs);
    }
  }
  return seen.size();
}

InequalitySystem box_region(std::span<const double> upper) {
  const int k = static_cast<int>(upper.size());
  InequalitySystem sys;
  sys.vars = rate_vars(k);
  for (int i = 0; i < k; ++i) {
    Row row;
    row.coeffs.assign(k, 0);
    row.coeffs[i] = 1;
    row.rhs = upper[i];
    row.family = Family::Box;
    row.params.i = i + 1;
    sys.rows.push_back(std::move(row));
  }
  for (int i = 0; i < k; ++i) {
    Row row;
    row.coeffs.assign(k, 0);
    row.coeffs[i] = -1;
    row.rhs = 0.0;
    row.family = Family::Nonneg;
    row.params.i = i + 1;
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

Family classify_coeffs(std::span<const int> c, RowParams* params_out) {
  const int k = static_cast<int>(c.size());
  RowParams params;
  auto done = [&](Family f) {
    if (params_out) *params_out = params;
    return f;
  };

  int n_ones = 0, n_twos = 0, n_neg = 0, n_other = 0;
  int single_idx = -1;
  for (int i = 0; i < k; ++i) {
    if (c[i] == 1) { ++n_ones; single_idx = i; }
    else if (c[i] == 2) { ++n_twos; single_idx = i; }
    else if (c[i] == -1) { ++n_neg; single_idx = i; }
    else if (c[i] != 0) ++n_other;
  }
  if (n_other > 0) return done(Family::Fm);
  if (n_neg == 1 && n_ones == 0 && n_twos == 0) {
    params.i = single_idx + 1;
    return done(Family::Nonneg);
  }
  if (n_neg > 0) return done(Family::Fm);
  if (n_twos == 1 && n_ones == k - 1) {
    params.i = single_idx + 1;
    return done(Family::SumPlusOne);
  }
  if (n_twos > 0) return done(Family::Fm);
  if (n_ones == 1) {
    params.i = single_idx + 1;
    return done(Family::Individual);
  }
  if (n_ones == k) return done(Family::FullSum);
  if (n_ones >= 2) {
    // cyclic window: exactly one descent from 0 to 1
    int start = -1;
    for (int i = 0; i < k; ++i) {
      if (c[i] == 1 && c[(i + k - 1) % k] == 0) {
        if (start >= 0) return done(Family::Fm);  // more than one run
        start = i;
      }
    }
    if (start < 0) return done(Family::Fm);
    for (int t = 0; t < n_ones; ++t) {
      if (c[(start + t) % k] != 1) return done(Family::Fm);
    }
    params.m = start + 1;
    params.l = n_ones;
    return done(Family::AdjacentSum);
  }
  return done(Family::Fm);
}

void dedupe_exact_rows(InequalitySystem& sys) {
  std::vector<Row> kept;
  kept.reserve(sys.rows.size());
  for (Row& row : sys.rows) {
    bool dup = false;
    for (const Row& prev : kept) {
      if (prev.coeffs == row.coeffs && prev.rhs == row.rhs) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(std::move(row));
  }
  sys.rows = std::move(kept);
}

}  // namespace cyclicap
