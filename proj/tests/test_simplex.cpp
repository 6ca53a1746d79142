#include <doctest.h>

#include <cmath>
#include <vector>

#include "cyclicap/channel.hpp"
#include "cyclicap/polyhedra.hpp"
#include "cyclicap/regions.hpp"
#include "cyclicap/rng.hpp"
#include "cyclicap/simplex.hpp"

#include "helpers.hpp"

using namespace cyclicap;

TEST_CASE("box maximum and witness") {
  const InequalitySystem box = box_region(std::vector<double>{4.0, 4.0});
  const std::vector<double> obj{1.0, 1.0};
  const LpResult res = lp_max(box, obj);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.value == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(res.witness[0] == doctest::Approx(4.0));
  CHECK(res.witness[1] == doctest::Approx(4.0));
}

TEST_CASE("empty system is unbounded") {
  InequalitySystem sys;
  sys.vars = rate_vars(2);
  const std::vector<double> obj{1.0, 0.0};
  CHECK(lp_max(sys, obj).status == LpStatus::Unbounded);
  const std::vector<double> zero{0.0, 0.0};
  CHECK(lp_max(sys, zero).status == LpStatus::Optimal);
}

TEST_CASE("sum rate of the two-user region equals the tightest full-sum row") {
  const auto ch = test::canonical_k2();
  const HkParams hk = hk_params(ch, etw_split(ch));
  const InequalitySystem sys = achievable_region(hk, 2);
  const LpResult res = lp_max(sys, std::vector<double>{1.0, 1.0});
  REQUIRE(res.status == LpStatus::Optimal);
  // independent route: direct minimum over the sum-rate branches
  const double expect = std::min({hk.e[0] + hk.e[1], hk.r[0], hk.r[1]});
  CHECK(res.value == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("infeasible and negative-rhs systems") {
  std::vector<std::vector<double>> rows{{1.0}, {-1.0}};
  std::vector<double> rhs{-1.0, 0.0};  // x <= -1 and x >= 0
  CHECK(simplex_max(std::vector<double>{1.0}, rows, rhs).status ==
        LpStatus::Infeasible);

  rows = {{-1.0}, {1.0}};
  rhs = {-2.0, 5.0};  // x >= 2, x <= 5
  const LpResult hi = simplex_max(std::vector<double>{1.0}, rows, rhs);
  REQUIRE(hi.status == LpStatus::Optimal);
  CHECK(hi.value == doctest::Approx(5.0));
  const LpResult lo = simplex_max(std::vector<double>{-1.0}, rows, rhs);
  REQUIRE(lo.status == LpStatus::Optimal);
  CHECK(lo.value == doctest::Approx(-2.0));
}

TEST_CASE("duality certificate on random bounded systems") {
  Pcg32 rng(2024, 11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u32() % 4);
    const int extra = 1 + static_cast<int>(rng.next_u32() % 6);
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    for (int j = 0; j < n; ++j) {  // bounding box keeps the LP finite
      std::vector<double> up(n, 0.0), dn(n, 0.0);
      up[j] = 1.0;
      dn[j] = -1.0;
      rows.push_back(up);
      rhs.push_back(rng.uniform(0.5, 6.0));
      rows.push_back(dn);
      rhs.push_back(rng.uniform(0.0, 0.5));
    }
    for (int r = 0; r < extra; ++r) {
      std::vector<double> row(n);
      for (double& v : row) v = rng.uniform(-1.0, 1.0);
      rows.push_back(row);
      rhs.push_back(rng.uniform(-0.2, 4.0));
    }
    std::vector<double> obj(n);
    for (double& v : obj) v = rng.uniform(-1.0, 1.0);

    const LpResult res = simplex_max(obj, rows, rhs);
    if (res.status != LpStatus::Optimal) continue;

    double primal = 0.0;
    for (int j = 0; j < n; ++j) primal += obj[j] * res.witness[j];
    double dual_value = 0.0;
    for (std::size_t i = 0; i < rhs.size(); ++i) {
      CHECK(res.dual[i] >= -1e-9);
      dual_value += res.dual[i] * rhs[i];
    }
    CHECK(std::fabs(primal - dual_value) <= 1e-7 * (1.0 + std::fabs(primal)));
    for (int j = 0; j < n; ++j) {  // dual feasibility A^T y = c on free vars
      double aty = 0.0;
      for (std::size_t i = 0; i < rows.size(); ++i) aty += rows[i][j] * res.dual[i];
      CHECK(std::fabs(aty - obj[j]) <= 1e-7);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      double lhs = 0.0;
      for (int j = 0; j < n; ++j) lhs += rows[i][j] * res.witness[j];
      CHECK(lhs <= rhs[i] + 1e-9);
    }
  }
}

TEST_CASE("deterministic pivoting gives identical results") {
  const auto ch = test::canonical_k2();
  const HkParams hk = hk_params(ch, etw_split(ch));
  const InequalitySystem sys = achievable_region(hk, 2);
  const std::vector<double> obj{0.7, 1.3};
  const LpResult a = lp_max(sys, obj);
  const LpResult b = lp_max(sys, obj);
  REQUIRE(a.status == LpStatus::Optimal);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
  CHECK(a.dual == b.dual);
}
