#include "cyclicap/fourier_motzkin.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "cyclicap/polyhedra.hpp"

namespace cyclicap {

namespace {

int mod(int i, int k) { return ((i % k) + k) % k; }

// Coefficients of R_i in the compact region never exceed 2; anything past 4
// would mean the elimination went off the rails.
constexpr int kCoeffTripwire = 4;

void check_tripwire(const FmSystem& sys) {
  for (const FmRow& row : sys.rows) {
    for (int c : row.coeffs) {
      if (std::abs(c) > kCoeffTripwire) {
        throw std::runtime_error("elimination produced a coefficient beyond the tripwire");
      }
    }
  }
}

}  // namespace

FmSystem polymatroid_system(const HkParams& hk, int k) {
  if (k < 2) {
    throw ValidationError(ValidationCode::UserCountTooSmall, "k must be >= 2");
  }
  if (static_cast<int>(hk.a.size()) != k) {
    throw ValidationError(ValidationCode::LengthMismatch,
                          "parameter length does not match k");
  }
  FmSystem sys;
  sys.vars = rate_vars(k);
  for (int i = 1; i <= k; ++i) sys.vars.push_back("T_" + std::to_string(i));

  const int n = 2 * k;
  auto row = [&](double rhs) {
    FmRow r;
    r.coeffs.assign(n, 0);
    r.rhs = rhs;
    return r;
  };
  for (int i = 0; i < k; ++i) {
    const int t = k + i;               // T_i column
    const int tn = k + mod(i + 1, k);  // T_{i+1} column

    FmRow ra = row(hk.a[i]);
    ra.coeffs[i] = 1; ra.coeffs[t] = -1;
    sys.rows.push_back(std::move(ra));

    FmRow rd = row(hk.d[i]);
    rd.coeffs[i] = 1;
    sys.rows.push_back(std::move(rd));

    FmRow re = row(hk.e[i]);
    re.coeffs[i] = 1; re.coeffs[t] = -1; re.coeffs[tn] += 1;
    sys.rows.push_back(std::move(re));

    FmRow rg = row(hk.g[i]);
    rg.coeffs[i] = 1; rg.coeffs[tn] += 1;
    sys.rows.push_back(std::move(rg));

    FmRow rs = row(0.0);  // S_i >= 0
    rs.coeffs[i] = -1; rs.coeffs[t] = 1;
    sys.rows.push_back(std::move(rs));

    FmRow rt = row(0.0);  // T_i >= 0
    rt.coeffs[t] = -1;
    sys.rows.push_back(std::move(rt));

    FmRow rr = row(0.0);  // R_i >= 0, implied but emitted for safety
    rr.coeffs[i] = -1;
    sys.rows.push_back(std::move(rr));
  }
  return sys;
}

FmSystem eliminate_variable(const FmSystem& sys, std::string_view var) {
  const auto it = std::find(sys.vars.begin(), sys.vars.end(), var);
  if (it == sys.vars.end()) {
    throw ValidationError(ValidationCode::BadParameter,
                          "variable not present: " + std::string(var));
  }
  const int vi = static_cast<int>(it - sys.vars.begin());
  const int n = static_cast<int>(sys.vars.size());

  FmSystem out;
  out.vars.reserve(n - 1);
  for (int j = 0; j < n; ++j) {
    if (j != vi) out.vars.push_back(sys.vars[j]);
  }
  auto drop_col = [&](const std::vector<int>& c) {
    std::vector<int> r;
    r.reserve(n - 1);
    for (int j = 0; j < n; ++j) {
      if (j != vi) r.push_back(c[j]);
    }
    return r;
  };

  std::vector<int> pos, neg;
  for (int idx = 0; idx < static_cast<int>(sys.rows.size()); ++idx) {
    const int c = sys.rows[idx].coeffs[vi];
    if (c > 0) {
      pos.push_back(idx);
    } else if (c < 0) {
      neg.push_back(idx);
    } else {
      FmRow kept;
      kept.coeffs = drop_col(sys.rows[idx].coeffs);
      kept.rhs = sys.rows[idx].rhs;
      kept.parent_a = idx;  // carried over unchanged
      out.rows.push_back(std::move(kept));
    }
  }

  std::vector<FmRow> combined;
  for (int p : pos) {
    for (int q : neg) {
      const FmRow& rp = sys.rows[p];
      const FmRow& rq = sys.rows[q];
      const int sp = -rq.coeffs[vi];  // > 0
      const int sq = rp.coeffs[vi];   // > 0
      FmRow r;
      r.coeffs.resize(n);
      for (int j = 0; j < n; ++j) r.coeffs[j] = sp * rp.coeffs[j] + sq * rq.coeffs[j];
      r.rhs = sp * rp.rhs + sq * rq.rhs;
      r.parent_a = p;
      r.parent_b = q;
      const bool all_zero =
          std::all_of(r.coeffs.begin(), r.coeffs.end(), [](int c) { return c == 0; });
      if (all_zero && r.rhs >= -1e-12) continue;  // 0 <= nonnegative constant
      r.coeffs = drop_col(r.coeffs);
      combined.push_back(std::move(r));
    }
  }
  std::sort(combined.begin(), combined.end(), [](const FmRow& a, const FmRow& b) {
    if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
    if (a.rhs != b.rhs) return a.rhs < b.rhs;
    if (a.parent_a != b.parent_a) return a.parent_a < b.parent_a;
    return a.parent_b < b.parent_b;
  });
  for (FmRow& r : combined) out.rows.push_back(std::move(r));
  return out;
}

FmSystem remove_redundant(const FmSystem& sys, Exec exec) {
  std::vector<std::vector<int>> coeffs;
  std::vector<double> rhs;
  coeffs.reserve(sys.rows.size());
  rhs.reserve(sys.rows.size());
  for (const FmRow& row : sys.rows) {
    coeffs.push_back(row.coeffs);
    rhs.push_back(row.rhs);
  }
  FmSystem out;
  out.vars = sys.vars;
  for (int i : nonredundant_rows(coeffs, rhs, exec)) out.rows.push_back(sys.rows[i]);
  return out;
}

InequalitySystem to_inequality_system(const FmSystem& sys) {
  InequalitySystem out;
  out.vars = sys.vars;
  for (const FmRow& row : sys.rows) {
    Row r;
    r.coeffs = row.coeffs;
    r.rhs = row.rhs;
    r.family = classify_coeffs(r.coeffs, &r.params);
    out.rows.push_back(std::move(r));
  }
  return out;
}

InequalitySystem project_to_rates(const HkParams& hk, int k, Exec exec) {
  FmSystem sys = polymatroid_system(hk, k);
  for (int t = 1; t <= k; ++t) {
    sys = eliminate_variable(sys, "T_" + std::to_string(t));
    sys = remove_redundant(sys, exec);
    check_tripwire(sys);
  }
  return to_inequality_system(sys);
}

}  // namespace cyclicap
