#include "cyclicap/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace cyclicap {

namespace {

int mod(int i, int k) { return ((i % k) + k) % k; }

void check_k(int params_len, int k) {
  if (k < 2) {
    throw ValidationError(ValidationCode::UserCountTooSmall, "k must be >= 2");
  }
  if (params_len != k) {
    throw ValidationError(ValidationCode::LengthMismatch,
                          "parameter length does not match k");
  }
}

Row make_row(int k, Family family, RowParams params, double rhs) {
  Row row;
  row.coeffs.assign(k, 0);
  row.rhs = rhs;
  row.family = family;
  row.params = params;
  return row;
}

void add_nonneg_rows(InequalitySystem& sys, int k) {
  for (int i = 0; i < k; ++i) {
    Row row = make_row(k, Family::Nonneg, {.i = i + 1}, 0.0);
    row.coeffs[i] = -1;
    sys.rows.push_back(std::move(row));
  }
}

// Shared emitter for the common family layout. `individual` holds the
// min branches of the per-user rows, `adj1`/`adj2` the two branches of the
// (m, l) window rows, `full` the full-sum branches in order, `spo` the
// sum-plus-one right-hand sides.
struct FamilyRows {
  std::vector<std::vector<double>> individual;  // per i, one or two branches
  std::vector<double> full;                     // k+1 entries
  std::vector<double> spo;                      // per i
};

InequalitySystem family_layout(int k, const FamilyRows& t,
                                auto&& adj_branch1, auto&& adj_branch2) {
  InequalitySystem sys;
  sys.vars = rate_vars(k);
  for (int i = 0; i < k; ++i) {
    for (double rhs : t.individual[i]) {
      Row row = make_row(k, Family::Individual, {.i = i + 1}, rhs);
      row.coeffs[i] = 1;
      sys.rows.push_back(std::move(row));
    }
  }
  for (int l = 2; l <= k - 1; ++l) {
    for (int m = 0; m < k; ++m) {
      for (int branch = 0; branch < 2; ++branch) {
        const double rhs = branch == 0 ? adj_branch1(m, l) : adj_branch2(m, l);
        Row row = make_row(k, Family::AdjacentSum, {.m = m + 1, .l = l}, rhs);
        for (int tt = 0; tt < l; ++tt) row.coeffs[mod(m + tt, k)] += 1;
        sys.rows.push_back(std::move(row));
      }
    }
  }
  {
    Row row = make_row(k, Family::FullSum, {}, t.full[0]);
    row.coeffs.assign(k, 1);
    sys.rows.push_back(std::move(row));
    for (int i = 0; i < k; ++i) {
      Row ri = make_row(k, Family::FullSum, {.i = i + 1}, t.full[i + 1]);
      ri.coeffs.assign(k, 1);
      sys.rows.push_back(std::move(ri));
    }
  }
  for (int i = 0; i < k; ++i) {
    Row row = make_row(k, Family::SumPlusOne, {.i = i + 1}, t.spo[i]);
    row.coeffs.assign(k, 1);
    row.coeffs[i] = 2;
    sys.rows.push_back(std::move(row));
  }
  add_nonneg_rows(sys, k);
  dedupe_exact_rows(sys);
  return sys;
}

}  // namespace

InequalitySystem achievable_region(const HkParams& hk, int k) {
  check_k(static_cast<int>(hk.a.size()), k);
  FamilyRows t;
  t.individual.resize(k);
  for (int i = 0; i < k; ++i) {
    t.individual[i] = {hk.d[i], hk.a[i] + hk.e[mod(i - 1, k)]};
  }
  double sum_e = 0.0;
  for (double x : hk.e) sum_e += x;
  t.full.push_back(sum_e);
  for (int i = 0; i < k; ++i) t.full.push_back(hk.r[i]);
  for (int i = 0; i < k; ++i) {
    t.spo.push_back(hk.a[i] + hk.g[i] + sum_e - hk.e[i]);
  }
  auto branch1 = [&](int m, int l) {
    double rhs = hk.g[m];
    for (int tt = 1; tt <= l - 2; ++tt) rhs += hk.e[mod(m + tt, k)];
    return rhs + hk.a[mod(m + l - 1, k)];
  };
  auto branch2 = [&](int m, int l) {
    double rhs = 0.0;
    for (int tt = -1; tt <= l - 2; ++tt) rhs += hk.e[mod(m + tt, k)];
    return rhs + hk.a[mod(m + l - 1, k)];
  };
  return family_layout(k, t, branch1, branch2);
}

InequalitySystem outer_region(const OuterParams& ob, int k) {
  check_k(static_cast<int>(ob.alpha.size()), k);
  FamilyRows t;
  t.individual.resize(k);
  for (int i = 0; i < k; ++i) t.individual[i] = {ob.lambda[i]};
  double sum_a = 0.0;
  for (double x : ob.alpha) sum_a += x;
  t.full.push_back(sum_a);
  for (int i = 0; i < k; ++i) t.full.push_back(ob.rho[i]);
  for (int i = 0; i < k; ++i) {
    t.spo.push_back(ob.beta[i] + ob.gamma[i] + sum_a - ob.alpha[i]);
  }
  auto branch1 = [&](int m, int l) {
    double rhs = ob.gamma[m];
    for (int tt = 1; tt <= l - 2; ++tt) rhs += ob.alpha[mod(m + tt, k)];
    return rhs + ob.beta[mod(m + l - 1, k)];
  };
  auto branch2 = [&](int m, int l) {
    double rhs = ob.mu[m];
    for (int tt = 0; tt <= l - 2; ++tt) rhs += ob.alpha[mod(m + tt, k)];
    return rhs + ob.beta[mod(m + l - 1, k)];
  };
  return family_layout(k, t, branch1, branch2);
}

InequalitySystem ts_region_3(const HkParams& hk) {
  if (hk.a.size() != 3) {
    throw ValidationError(ValidationCode::BadParameter,
                          "time-sharing region is defined for k = 3 only");
  }
  const int k = 3;
  FamilyRows t;
  t.individual.resize(k);
  for (int i = 0; i < k; ++i) t.individual[i] = {hk.d[i]};
  double sum_e = hk.e[0] + hk.e[1] + hk.e[2];
  t.full.push_back(sum_e);
  for (int i = 0; i < k; ++i) t.full.push_back(hk.r[i]);
  for (int i = 0; i < k; ++i) {
    t.spo.push_back(hk.a[i] + hk.g[i] + sum_e - hk.e[i]);
  }
  auto branch1 = [&](int m, int l) {
    double rhs = hk.g[m];
    for (int tt = 1; tt <= l - 2; ++tt) rhs += hk.e[mod(m + tt, k)];
    return rhs + hk.a[mod(m + l - 1, k)];
  };
  auto branch2 = [&](int m, int l) {
    double rhs = 0.0;
    for (int tt = -1; tt <= l - 2; ++tt) rhs += hk.e[mod(m + tt, k)];
    return rhs + hk.a[mod(m + l - 1, k)];
  };
  return family_layout(k, t, branch1, branch2);
}

PowerSplit marginalize_split(const ChannelInstance& ch, const PowerSplit& split,
                             int user) {
  if (user < 1 || user > ch.k) {
    throw ValidationError(ValidationCode::IndexOutOfRange,
                          "user index must lie in 1..k");
  }
  if (static_cast<int>(split.inr_private.size()) != ch.k) {
    throw ValidationError(ValidationCode::LengthMismatch,
                          "split dimension does not match channel");
  }
  PowerSplit out = split;
  out.inr_private[user - 1] = ch.inr[user - 1];
  return out;
}

InequalitySystem strong_region(const ChannelInstance& ch) {
  const Regime regime = classify_regime(ch);
  if (regime != Regime::Strong && regime != Regime::VeryStrong) {
    throw ValidationError(ValidationCode::WrongRegime,
                          "strong-regime capacity requires INR_i >= SNR_i for all i");
  }
  const int k = ch.k;
  InequalitySystem sys;
  sys.vars = rate_vars(k);
  for (int i = 0; i < k; ++i) {
    Row row = make_row(k, Family::Individual, {.i = i + 1},
                       std::log2(1.0 + ch.snr[i]));
    row.coeffs[i] = 1;
    sys.rows.push_back(std::move(row));
  }
  for (int i = 0; i < k; ++i) {
    const int n = mod(i + 1, k);
    const Family fam = k == 2 ? Family::FullSum : Family::AdjacentSum;
    RowParams params = k == 2 ? RowParams{.i = i + 1} : RowParams{.m = i + 1, .l = 2};
    Row row = make_row(k, fam, params, std::log2(1.0 + ch.snr[i] + ch.inr[n]));
    row.coeffs[i] += 1;
    row.coeffs[n] += 1;
    sys.rows.push_back(std::move(row));
  }
  add_nonneg_rows(sys, k);
  dedupe_exact_rows(sys);
  return sys;
}

InequalitySystem mac_intersection(const ChannelInstance& ch) {
  const int k = ch.k;
  InequalitySystem sys;
  sys.vars = rate_vars(k);
  for (int i = 0; i < k; ++i) {
    const int n = mod(i + 1, k);
    Row direct = make_row(k, Family::Mac, {.i = i + 1}, std::log2(1.0 + ch.snr[i]));
    direct.coeffs[i] = 1;
    sys.rows.push_back(std::move(direct));
    Row cross = make_row(k, Family::Mac, {.i = i + 1}, std::log2(1.0 + ch.inr[n]));
    cross.coeffs[n] = 1;
    sys.rows.push_back(std::move(cross));
    Row sum = make_row(k, Family::Mac, {.i = i + 1},
                       std::log2(1.0 + ch.snr[i] + ch.inr[n]));
    sum.coeffs[i] += 1;
    sum.coeffs[n] += 1;
    sys.rows.push_back(std::move(sum));
  }
  add_nonneg_rows(sys, k);
  dedupe_exact_rows(sys);
  return sys;
}

GapReport family_gaps(const HkParams& hk, const OuterParams& ob, int k,
                      GapProfile profile) {
  constexpr double kTol = 1e-9;
  check_k(static_cast<int>(hk.a.size()), k);
  check_k(static_cast<int>(ob.alpha.size()), k);
  if (profile == GapProfile::TimeShare3 && k != 3) {
    throw ValidationError(ValidationCode::BadParameter,
                          "the time-sharing profile requires k = 3");
  }
  const InequalitySystem inner = profile == GapProfile::TimeShare3
                                     ? ts_region_3(hk)
                                     : achievable_region(hk, k);
  const InequalitySystem outer = outer_region(ob, k);

  struct Entry {
    Family family;
    RowParams params;
    int l;
    double min_inner = std::numeric_limits<double>::infinity();
    double min_outer = std::numeric_limits<double>::infinity();
    int order;
  };
  std::map<std::vector<int>, Entry> groups;
  int order = 0;
  auto collect = [&](const InequalitySystem& sys, bool is_inner) {
    for (const Row& row : sys.rows) {
      if (row.family == Family::Nonneg) continue;
      auto [it, inserted] = groups.try_emplace(row.coeffs);
      Entry& entry = it->second;
      if (inserted) {
        entry.family = row.family;
        entry.params = row.params;
        entry.l = coeff_sum(row);
        entry.order = order++;
      }
      double& slot = is_inner ? entry.min_inner : entry.min_outer;
      slot = std::min(slot, row.rhs);
    }
  };
  collect(inner, true);
  collect(outer, false);

  std::vector<const Entry*> ordered;
  for (const auto& [coeffs, entry] : groups) ordered.push_back(&entry);
  std::sort(ordered.begin(), ordered.end(),
            [](const Entry* a, const Entry* b) { return a->order < b->order; });

  GapReport report;
  report.all_pass = true;
  for (const Entry* entry : ordered) {
    if (!std::isfinite(entry->min_inner) || !std::isfinite(entry->min_outer)) {
      throw ValidationError(ValidationCode::BadParameter,
                            "achievable and outer families do not match");
    }
    FamilyGap gap;
    gap.family = entry->family;
    gap.params = entry->params;
    gap.l = entry->l;
    gap.delta = entry->min_outer - entry->min_inner;
    if (profile == GapProfile::TwoBit) {
      switch (entry->family) {
        case Family::Individual: gap.bound = 2.0; gap.bound_tight = 2.0; break;
        case Family::AdjacentSum: gap.bound = 2.0 * entry->l; gap.bound_tight = entry->l + 1.0; break;
        case Family::FullSum: gap.bound = 2.0 * k; gap.bound_tight = k; break;
        case Family::SumPlusOne: gap.bound = 2.0 * (k + 1); gap.bound_tight = k + 1.0; break;
        default: break;
      }
    } else {
      switch (entry->family) {
        case Family::Individual: gap.bound = 1.0; break;
        case Family::AdjacentSum: gap.bound = 3.0; break;
        case Family::FullSum: gap.bound = 3.0; break;
        case Family::SumPlusOne: gap.bound = 4.0; break;
        default: break;
      }
      gap.bound_tight = gap.bound;
    }
    gap.pass = gap.delta <= gap.bound + kTol;
    report.all_pass = report.all_pass && gap.pass;
    report.families.push_back(std::move(gap));
  }
  return report;
}

}  // namespace cyclicap
