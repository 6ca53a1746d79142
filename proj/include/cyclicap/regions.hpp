#pragma once

#include <optional>
#include <vector>

#include "cyclicap/channel.hpp"
#include "cyclicap/inequality_system.hpp"

namespace cyclicap {

/// Compact achievable region over R_1..R_k, min-expanded:
///   per i:    R_i <= d_i,  R_i <= a_i + e_{i-1}
///   per (m,l), l in 2..k-1 (cyclic windows):
///             sum_{j=m}^{m+l-1} R_j <= g_m + sum_{j=m+1}^{m+l-2} e_j + a_{m+l-1}
///             sum_{j=m}^{m+l-1} R_j <= sum_{j=m-1}^{m+l-2} e_j + a_{m+l-1}
///   full sum: sum R_j <= sum e_j and sum R_j <= r_i per i
///   per i:    sum R_j + R_i <= a_i + g_i + sum_{j != i} e_j
/// plus -R_i <= 0. Distinct coefficient families number exactly k^2+1.
InequalitySystem achievable_region(const HkParams& hk, int k);

/// Capacity outer bound with the same family structure:
/// (lambda; gamma/mu windows; sum alpha, rho_i; beta+gamma+sum alpha).
InequalitySystem outer_region(const OuterParams& ob, int k);

/// Three-user time-sharing region: the achievable region without the
/// a_i + e_{i-1} individual rows. Requires k = 3.
InequalitySystem ts_region_3(const HkParams& hk);

/// Removes user `user`'s (1-based) common message: that user's split becomes
/// all-private, others unchanged.
PowerSplit marginalize_split(const ChannelInstance& ch, const PowerSplit& split,
                             int user);

/// Capacity region in the strong interference regime:
///   R_i <= log2(1+SNR_i),  R_i + R_{i+1} <= log2(1+SNR_i+INR_{i+1}).
/// Throws unless the regime is Strong or VeryStrong.
InequalitySystem strong_region(const ChannelInstance& ch);

/// Intersection of the K per-receiver multiple-access capacity regions;
/// 3 rows per receiver, any regime.
InequalitySystem mac_intersection(const ChannelInstance& ch);

enum class GapProfile {
  TwoBit,      // bounds 2, 2l, 2K, 2(K+1); proof-tight 2, l+1, K, K+1
  TimeShare3,  // k = 3 time-sharing pipeline; bounds 1, 3, 3, 4
};

struct FamilyGap {
  Family family = Family::Individual;
  RowParams params;
  int l = 0;               // rate-term count of the family
  double delta = 0.0;      // min outer rhs - min achievable rhs
  double bound = 0.0;      // claimed bound for the profile
  double bound_tight = 0.0;
  bool pass = false;       // delta <= bound (+1e-9)
};

struct GapReport {
  std::optional<Regime> regime;
  std::vector<FamilyGap> families;
  std::optional<double> certified_b;
  bool all_pass = false;
};

/// Matched-family deltas between the outer bound and the achievable region
/// (or the k=3 time-sharing region for GapProfile::TimeShare3).
GapReport family_gaps(const HkParams& hk, const OuterParams& ob, int k,
                      GapProfile profile = GapProfile::TwoBit);

}  // namespace cyclicap
