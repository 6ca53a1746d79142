#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "cyclicap/channel.hpp"
#include "cyclicap/gdof.hpp"
#include "cyclicap/json_io.hpp"
#include "cyclicap/regions.hpp"

#include "helpers.hpp"

using namespace cyclicap;

TEST_CASE("empty system renders the empty schema") {
  InequalitySystem sys;
  CHECK(render_json(sys) == "{\"vars\":[],\"rows\":[]}");
}

TEST_CASE("canonical region round-trips byte-identically") {
  const auto ch = test::canonical_k2();
  const auto sys = achievable_region(hk_params(ch, etw_split(ch)), 2);
  const std::string text = render_json(sys);
  const InequalitySystem parsed = parse_region_json(text);
  CHECK(parsed == sys);
  CHECK(render_json(parsed) == text);
}

TEST_CASE("17-significant-digit rhs rendering") {
  const auto ch = test::canonical_k2();
  const auto sys = achievable_region(hk_params(ch, etw_split(ch)), 2);
  const std::string text = render_json(sys);
  // the individual d row for SNR = 15 under ETW: log2(8.5)
  char expect[64];
  std::snprintf(expect, sizeof(expect), "%.17g", std::log2(8.5));
  CHECK(text.find(std::string("\"rhs\":") + expect) != std::string::npos);
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("rendering is deterministic") {
  const auto ch = make_channel(3, {18, 12, 25}, {4, 2, 6});
  const auto sys = achievable_region(hk_params(ch, etw_split(ch)), 3);
  CHECK(render_json(sys) == render_json(sys));
}

TEST_CASE("row and params layout") {
  const auto ch = make_channel(3, {18, 12, 25}, {4, 2, 6});
  const auto sys = outer_region(outer_params(ch), 3);
  const std::string text = render_json(sys);
  CHECK(text.find("\"family\":\"individual\",\"params\":{\"i\":1}") != std::string::npos);
  CHECK(text.find("\"family\":\"adjacent_sum\",\"params\":{\"m\":1,\"l\":2}") !=
        std::string::npos);
  CHECK(text.find("\"family\":\"full_sum\",\"params\":{}") != std::string::npos);
  // individual rows come first, nonnegativity rows last
  CHECK(text.find("\"individual\"") < text.find("\"adjacent_sum\""));
  CHECK(text.find("\"adjacent_sum\"") < text.find("\"full_sum\""));
  CHECK(text.find("\"full_sum\"") < text.find("\"sum_plus_one\""));
  CHECK(text.find("\"sum_plus_one\"") < text.find("\"nonneg\""));
}

TEST_CASE("gap report JSON") {
  const auto ch = test::canonical_k2();
  GapReport rep = family_gaps(hk_params(ch, etw_split(ch)), outer_params(ch), 2);
  rep.regime = classify_regime(ch);
  rep.certified_b = 1.25;
  const std::string text = render_gap_json(rep);
  CHECK(text.find("\"regime\":\"weak\"") != std::string::npos);
  CHECK(text.find("\"certified_b\":1.25") != std::string::npos);
  CHECK(text.find("\"all_pass\":true") != std::string::npos);

  rep.certified_b.reset();
  CHECK(render_gap_json(rep).find("\"certified_b\":null") != std::string::npos);
}

TEST_CASE("inequality report JSON") {
  const auto ch = test::canonical_k2();
  const IneqReport rep =
      useful_inequalities(ch, hk_params(ch, etw_split(ch)), outer_params(ch));
  const std::string text = render_ineq_json(rep);
  CHECK(text.find("\"regime\":\"weak\"") != std::string::npos);
  CHECK(text.find("\"name\":\"gamma_minus_g\"") != std::string::npos);
  CHECK(text.find("\"exact\":true") != std::string::npos);
}

TEST_CASE("csv layouts") {
  const auto points = gdof_sweep(2, std::vector<double>{0.0, 2.0}, 1e8);
  const std::string csv = gdof_csv(points);
  CHECK(csv.rfind("alpha,snr_db,dsym_lower,dsym_upper,dsym_formula\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find("\n0,80,") != std::string::npos);

  Slice2d slice;
  slice.feasible = true;
  slice.vertices = {{0.0, 0.0}, {1.5, 0.0}, {0.0, 2.0}};
  CHECK(slice_csv(slice) == "x,y\n0,0\n1.5,0\n0,2\n");
}
