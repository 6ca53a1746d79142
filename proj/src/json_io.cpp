#include "cyclicap/json_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace cyclicap {

namespace {

void append_params(std::string& out, const RowParams& params) {
  out += '{';
  bool first = true;
  auto add = [&](const char* name, const std::optional<int>& v) {
    if (!v) return;
    if (!first) out += ',';
    first = false;
    out += '"';
    out += name;
    out += "\":";
    out += std::to_string(*v);
  };
  add("m", params.m);
  add("l", params.l);
  add("i", params.i);
  out += '}';
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string render_json(const InequalitySystem& sys) {
  std::string out = "{\"vars\":[";
  for (std::size_t i = 0; i < sys.vars.size(); ++i) {
    if (i) out += ',';
    out += '"';
    out += sys.vars[i];
    out += '"';
  }
  out += "],\"rows\":[";
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    const Row& row = sys.rows[r];
    if (r) out += ',';
    out += "{\"coeffs\":[";
    for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(row.coeffs[j]);
    }
    out += "],\"rhs\":";
    out += format_double(row.rhs);
    out += ",\"family\":\"";
    out += to_string(row.family);
    out += "\",\"params\":";
    append_params(out, row.params);
    out += '}';
  }
  out += "]}";
  return out;
}

InequalitySystem parse_region_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  InequalitySystem sys;
  sys.vars = j.at("vars").get<std::vector<std::string>>();
  for (const auto& jr : j.at("rows")) {
    Row row;
    row.coeffs = jr.at("coeffs").get<std::vector<int>>();
    row.rhs = jr.at("rhs").get<double>();
    const auto family = family_from_string(jr.at("family").get<std::string>());
    if (!family) {
      throw ValidationError(ValidationCode::BadParameter,
                            "unknown family tag in region JSON");
    }
    row.family = *family;
    if (jr.contains("params")) {
      const auto& jp = jr.at("params");
      if (jp.contains("i")) row.params.i = jp.at("i").get<int>();
      if (jp.contains("m")) row.params.m = jp.at("m").get<int>();
      if (jp.contains("l")) row.params.l = jp.at("l").get<int>();
    }
    if (row.coeffs.size() != sys.vars.size()) {
      throw ValidationError(ValidationCode::LengthMismatch,
                            "row coefficient count does not match vars");
    }
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

std::string render_gap_json(const GapReport& report) {
  std::string out = "{";
  if (report.regime) {
    out += "\"regime\":\"";
    out += to_string(*report.regime);
    out += "\",";
  }
  out += "\"families\":[";
  for (std::size_t i = 0; i < report.families.size(); ++i) {
    const FamilyGap& f = report.families[i];
    if (i) out += ',';
    out += "{\"family\":\"";
    out += to_string(f.family);
    out += "\",\"params\":";
    append_params(out, f.params);
    out += ",\"l\":";
    out += std::to_string(f.l);
    out += ",\"delta\":";
    out += format_double(f.delta);
    out += ",\"bound\":";
    out += format_double(f.bound);
    out += ",\"bound_tight\":";
    out += format_double(f.bound_tight);
    out += ",\"pass\":";
    out += f.pass ? "true" : "false";
    out += '}';
  }
  out += "],\"certified_b\":";
  out += report.certified_b ? format_double(*report.certified_b) : "null";
  out += ",\"all_pass\":";
  out += report.all_pass ? "true" : "false";
  out += '}';
  return out;
}

std::string render_ineq_json(const IneqReport& report) {
  std::string out = "{\"regime\":\"";
  out += to_string(report.regime);
  out += "\",\"all_pass\":";
  out += report.all_pass ? "true" : "false";
  out += ",\"users\":[";
  for (std::size_t u = 0; u < report.users.size(); ++u) {
    if (u) out += ',';
    out += "{\"i\":";
    out += std::to_string(report.users[u].user);
    out += ",\"checks\":[";
    const auto& checks = report.users[u].checks;
    for (std::size_t c = 0; c < checks.size(); ++c) {
      if (c) out += ',';
      out += "{\"name\":\"";
      out += checks[c].name;
      out += "\",\"delta\":";
      out += format_double(checks[c].delta);
      out += ",\"bound\":";
      out += format_double(checks[c].bound);
      out += ",\"exact\":";
      out += checks[c].exact ? "true" : "false";
      out += ",\"pass\":";
      out += checks[c].pass ? "true" : "false";
      out += '}';
    }
    out += "]}";
  }
  out += "]}";
  return out;
}

std::string gdof_csv(std::span<const GdofPoint> points) {
  std::string out = "alpha,snr_db,dsym_lower,dsym_upper,dsym_formula\n";
  for (const GdofPoint& p : points) {
    out += format_double(p.alpha);
    out += ',';
    out += format_double(linear_to_db(p.snr));
    out += ',';
    out += format_double(p.dsym_lower);
    out += ',';
    out += format_double(p.dsym_upper);
    out += ',';
    out += format_double(p.dsym_formula);
    out += '\n';
  }
  return out;
}

std::string slice_csv(const Slice2d& slice) {
  std::string out = "x,y\n";
  for (const auto& v : slice.vertices) {
    out += format_double(v[0]);
    out += ',';
    out += format_double(v[1]);
    out += '\n';
  }
  return out;
}

}  // namespace cyclicap
