#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cyclicap/cli.hpp"
#include "cyclicap/json_io.hpp"

using namespace cyclicap;

namespace {

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"cyclicap"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

// 10 log10(15) and 10 log10(3): the canonical weak example in dB
const std::string kSnrDb = "11.760912590556813,11.760912590556813";
const std::string kInrDb = "4.771212547196624,4.771212547196624";

}  // namespace

TEST_CASE("region command writes the five-family JSON") {
  const std::string out = tmp_file("cyclicap_region.json");
  CHECK(run({"region", "--k", "2", "--snr-db", kSnrDb, "--inr-db", kInrDb,
             "--split", "etw", "--out", out}) == 0);
  const InequalitySystem sys = parse_region_json(slurp(out));
  CHECK(sys.vars == std::vector<std::string>{"R_1", "R_2"});
  CHECK(family_count(sys) == 5);

  // byte-stable across runs
  const std::string out2 = tmp_file("cyclicap_region2.json");
  CHECK(run({"region", "--k", "2", "--snr-db", kSnrDb, "--inr-db", kInrDb,
             "--split", "etw", "--out", out2}) == 0);
  CHECK(slurp(out) == slurp(out2));
}

TEST_CASE("outer, ts3, and strong commands") {
  const std::string out = tmp_file("cyclicap_sys.json");
  CHECK(run({"outer", "--k", "2", "--snr-db", kSnrDb, "--inr-db", kInrDb,
             "--out", out}) == 0);
  CHECK(family_count(parse_region_json(slurp(out))) == 5);

  CHECK(run({"ts3", "--k", "3", "--snr-db", "12,11,13", "--inr-db", "3,2,4",
             "--out", out}) == 0);
  const InequalitySystem ts = parse_region_json(slurp(out));
  CHECK(ts.vars.size() == 3);
  CHECK(family_count(ts) == 10);

  CHECK(run({"strong", "--k", "2", "--snr-db", "6,6", "--inr-db", "13.8,13.8",
             "--out", out}) == 0);
  CHECK(parse_region_json(slurp(out)).vars.size() == 2);

  // strong on a weak instance is invalid input
  CHECK(run({"strong", "--k", "2", "--snr-db", kSnrDb, "--inr-db", kInrDb,
             "--out", out}) == 1);
}

TEST_CASE("invalid inputs exit 1") {
  const std::string out = tmp_file("cyclicap_bad.json");
  CHECK(run({"region", "--k", "2", "--snr-db", "11.76", "--inr-db", kInrDb,
             "--out", out}) == 1);
  CHECK(run({"region", "--k", "1", "--snr-db", "11.76", "--inr-db", "4.77",
             "--out", out}) == 1);
  CHECK(run({"region", "--k", "2", "--snr-db", kSnrDb, "--inr-db", kInrDb,
             "--split", "bogus", "--out", out}) == 1);
  CHECK(run({"nonsense"}) == 1);
  CHECK(run({"ts3", "--k", "2", "--snr-db", kSnrDb, "--inr-db", kInrDb,
             "--out", out}) == 1);
}

TEST_CASE("gap command") {
  const std::string out = tmp_file("cyclicap_gap.json");
  CHECK(run({"gap", "--k", "2", "--snr-db", kSnrDb, "--inr-db", kInrDb,
             "--out", out}) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("\"regime\":\"weak\"") != std::string::npos);
  CHECK(text.find("\"all_pass\":true") != std::string::npos);

  CHECK(run({"gap", "--k", "3", "--snr-db", "12,11,13", "--inr-db", "3,2,4",
             "--ts3", "--out", out}) == 0);
  CHECK(slurp(out).find("\"bound\":1,") != std::string::npos);

  // strong regime: capacity is known, the report is exact
  CHECK(run({"gap", "--k", "2", "--snr-db", "6,6", "--inr-db", "13.8,13.8",
             "--out", out}) == 0);
  const std::string strong_text = slurp(out);
  const auto pos = strong_text.find("\"certified_b\":");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(strong_text.substr(pos + 14)) <= 1e-9);
}

TEST_CASE("verify-fm succeeds on seeded weak instances") {
  CHECK(run({"verify-fm", "--k", "3", "--trials", "10", "--seed", "42"}) == 0);
}

TEST_CASE("failed assertions exit 2") {
  const std::string out = tmp_file("cyclicap_fail.json");
  // an all-private split near the strong boundary blows past the family
  // bounds, which are claimed for the ETW split
  CHECK(run({"gap", "--k", "2", "--snr-db", "30,30", "--inr-db", "29,29",
             "--split", "private-only", "--out", out}) == 2);
  CHECK(slurp(out).find("\"all_pass\":false") != std::string::npos);
  CHECK(run({"check-ineq", "--k", "2", "--snr-db", "30,30", "--inr-db", "29,29",
             "--split", "private-only", "--out", out}) == 2);
}

TEST_CASE("explicit splits are validated") {
  const std::string out = tmp_file("cyclicap_split.json");
  CHECK(run({"region", "--k", "2", "--snr-db", kSnrDb, "--inr-db", kInrDb,
             "--split", "0.5,1", "--out", out}) == 0);
  // inr_private beyond inr is invalid input
  CHECK(run({"region", "--k", "2", "--snr-db", kSnrDb, "--inr-db", kInrDb,
             "--split", "5,1", "--out", out}) == 1);
}

TEST_CASE("gdof CSV over the coarse grid") {
  const std::string out = tmp_file("cyclicap_gdof.csv");
  CHECK(run({"gdof", "--k", "3", "--alpha-min", "0", "--alpha-max", "2",
             "--steps", "5", "--snr-db", "80", "--out", out}) == 0);
  std::istringstream in(slurp(out));
  std::string line;
  std::getline(in, line);
  CHECK(line == "alpha,snr_db,dsym_lower,dsym_upper,dsym_formula");
  const std::vector<double> formula{1.0, 0.5, 0.5, 0.75, 1.0};
  int rows = 0;
  while (std::getline(in, line)) {
    REQUIRE(rows < 5);
    const auto last = line.rfind(',');
    CHECK(std::stod(line.substr(last + 1)) == doctest::Approx(formula[rows]));
    ++rows;
  }
  CHECK(rows == 5);
}

TEST_CASE("slice CSV") {
  const std::string out = tmp_file("cyclicap_slice.csv");
  CHECK(run({"slice", "--k", "2", "--snr-db", kSnrDb, "--inr-db", kInrDb,
             "--i", "1", "--j", "2", "--out", out}) == 0);
  const std::string text = slurp(out);
  CHECK(text.rfind("x,y\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') >= 4);

  CHECK(run({"slice", "--k", "3", "--snr-db", "12,11,13", "--inr-db", "3,2,4",
             "--region", "outer", "--i", "1", "--j", "3", "--fix", "0.5",
             "--out", out}) == 0);
  CHECK(slurp(out).rfind("x,y\n", 0) == 0);
}

TEST_CASE("check-ineq") {
  const std::string out = tmp_file("cyclicap_ineq.json");
  CHECK(run({"check-ineq", "--k", "2", "--snr-db", kSnrDb, "--inr-db", kInrDb,
             "--out", out}) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("\"all_pass\":true") != std::string::npos);
  CHECK(text.find("\"gamma_minus_g\"") != std::string::npos);
}
