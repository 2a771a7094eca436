#include "fhle/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fhle/error.hpp"

namespace fhle::io {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return fmt(v);
}

nlohmann::json to_json(const ProblemParams& p) {
  return {{"n", p.n}, {"s", number(p.s)}, {"a", number(p.a)}, {"p", number(p.p)}};
}

nlohmann::json to_json(const ScalingReport& r) {
  nlohmann::json radii = nlohmann::json::array(), values = nlohmann::json::array();
  for (double x : r.radii) radii.push_back(number(x));
  for (double x : r.values) values.push_back(number(x));
  return {{"check", r.check},
          {"params", to_json(r.params)},
          {"slope_expected", number(r.slope_expected)},
          {"slope_measured", number(r.slope_measured)},
          {"max_ratio", number(r.max_ratio)},
          {"radii", radii},
          {"values", values}};
}

std::string energy_curve_csv(const EnergyCurve& c) {
  std::ostringstream o;
  o << "lambda,E,part_bulk,part_nonlinear,part_sphere\n";
  for (std::size_t k = 0; k < c.lambdas.size(); ++k)
    o << fmt(c.lambdas[k]) << ',' << fmt(c.values[k]) << ',' << fmt(c.parts[k].bulk) << ','
      << fmt(c.parts[k].nonlinear) << ',' << fmt(c.parts[k].sphere) << '\n';
  return o.str();
}

std::string higher_order_csv(const std::vector<double>& lambdas, const std::vector<HigherOrderParts>& parts) {
  std::ostringstream o;
  o << "lambda,E,part_bulk,part_nonlinear,part_sphere_mass,part_sphere_mass_rate,part_radial_rate,"
       "part_tangential_rate,part_tangential\n";
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    const auto& p = parts[k];
    o << fmt(lambdas[k]) << ',' << fmt(p.total()) << ',' << fmt(p.bulk) << ',' << fmt(p.nonlinear) << ','
      << fmt(p.sphere_mass) << ',' << fmt(p.sphere_mass_rate) << ',' << fmt(p.radial_rate) << ','
      << fmt(p.tangential_rate) << ',' << fmt(p.tangential) << '\n';
  }
  return o.str();
}

std::string field_csv(const HalfSpaceField& f) {
  std::ostringstream o;
  o << "r,y,value\n";
  for (std::size_t i = 0; i < f.grid.nr(); ++i) o << fmt(f.grid.r[i]) << ",0," << fmt(f.boundary[i]) << '\n';
  for (std::size_t j = 0; j < f.grid.ny(); ++j)
    for (std::size_t i = 0; i < f.grid.nr(); ++i)
      o << fmt(f.grid.r[i]) << ',' << fmt(f.grid.y[j]) << ',' << fmt(f.at(i, j)) << '\n';
  return o.str();
}

std::string radial_csv(const SampledRadial& d, const std::string& value_column) {
  std::ostringstream o;
  o << "r," << value_column << '\n';
  for (std::size_t i = 0; i < d.r.size(); ++i) o << fmt(d.r[i]) << ',' << fmt(d.values[i]) << '\n';
  return o.str();
}

namespace {

bool parse_double(const std::string& text, double& out) {
  std::size_t used = 0;
  try {
    out = std::stod(text, &used);
  } catch (...) {
    return false;
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  return used == text.size();
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string scalar_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return fmt(v.get<double>());
  fail(ErrorKind::InvalidParameter, "config values must be scalars or arrays of scalars");
}

}  // namespace

SampledRadial read_profile_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoFailure, "cannot read profile file " + path);
  SampledRadial out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) fail(ErrorKind::InvalidParameter, path + ":" + std::to_string(lineno) + ": expected r,u");
    double r, u;
    if (!parse_double(trim(line.substr(0, comma)), r) || !parse_double(trim(line.substr(comma + 1)), u)) {
      if (out.r.empty() && lineno == 1) continue;  // header
      fail(ErrorKind::InvalidParameter, path + ":" + std::to_string(lineno) + ": non-numeric value");
    }
    out.r.push_back(r);
    out.values.push_back(u);
  }
  if (out.r.size() < 4) fail(ErrorKind::InvalidParameter, "profile needs at least 4 samples");
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-" || path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::IoFailure, "cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) fail(ErrorKind::IoFailure, "write to " + path + " failed");
}

std::map<std::string, std::vector<std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoFailure, "cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::map<std::string, std::vector<std::string>> out;
  const std::string body = trim(text);
  if (!body.empty() && body[0] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::InvalidParameter, std::string("config JSON: ") + e.what());
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
      auto& slot = out[it.key()];
      if (it->is_array())
        for (const auto& v : *it) slot.push_back(scalar_text(v));
      else
        slot.push_back(scalar_text(*it));
    }
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::InvalidParameter, path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    while (!key.empty() && key[0] == '-') key.erase(0, 1);
    out[key].push_back(trim(line.substr(eq + 1)));
  }
  return out;
}

}  // namespace fhle::io
