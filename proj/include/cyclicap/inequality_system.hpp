#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyclicap {

/// Constraint families of the rate-region systems. Individual, AdjacentSum,
/// FullSum and SumPlusOne are the four rate-constraint families (sum over l
/// adjacent users with l = 1, 2..K-1, K, K+1); Nonneg are the -R_i <= 0
/// rows; Mac tags multiple-access rows; Box tags plain box constraints;
/// Fm tags rows of intermediate elimination systems.
enum class Family { Individual, AdjacentSum, FullSum, SumPlusOne, Nonneg, Mac, Box, Fm };

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view s);

/// Which constraint instance a row belongs to; 1-based, matching the
/// external user labels. AdjacentSum rows carry (m, l); per-user rows carry i.
struct RowParams {
  std::optional<int> i;
  std::optional<int> m;
  std::optional<int> l;
  friend bool operator==(const RowParams&, const RowParams&) = default;
};

/// One linear inequality coeffs . x <= rhs (rhs in bits). Min constraints
/// are stored expanded, one row per branch, sharing a family tag.
struct Row {
  std::vector<int> coeffs;
  double rhs = 0.0;
  Family family = Family::Fm;
  RowParams params;
  friend bool operator==(const Row&, const Row&) = default;
};

struct InequalitySystem {
  std::vector<std::string> vars;
  std::vector<Row> rows;
  friend bool operator==(const InequalitySystem&, const InequalitySystem&) = default;
};

/// Variable names "R_1".."R_k".
std::vector<std::string> rate_vars(int k);

int coeff_sum(const Row& row);

/// Number of distinct coefficient vectors among the non-nonnegativity rows.
/// This is the constraint census: K^2+1 for the generated regions.
std::size_t family_count(const InequalitySystem& sys);

/// The box 0 <= x_i <= upper[i] over rate variables.
InequalitySystem box_region(std::span<const double> upper);

/// Classifies a rate-space coefficient vector into the standard family
/// layout (used to tag rows recovered from elimination). Returns Family::Fm
/// for anything that does not match.
Family classify_coeffs(std::span<const int> c, RowParams* params_out = nullptr);

/// Drops rows whose (coeffs, rhs) duplicate an earlier row.
void dedupe_exact_rows(InequalitySystem& sys);

}  // namespace cyclicap
