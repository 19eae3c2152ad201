#include "optomech/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace optomech {

using nlohmann::json;

namespace {

const std::set<std::string> param_keys{"omega_c", "J", "kappa_L", "kappa_R", "g", "omega_m",
                                       "gamma", "n_th", "delta", "alpha_L_re", "alpha_L_im",
                                       "alpha_R_re", "alpha_R_im"};

double number(const json& j, const char* key, bool required, double fallback) {
  if (!j.contains(key)) {
    if (required) throw ModelError(ErrorKind::bad_argument, std::string("missing key: ") + key);
    return fallback;
  }
  const json& v = j.at(key);
  if (!v.is_number())
    throw ModelError(ErrorKind::bad_argument, std::string("key is not a number: ") + key);
  return v.get<double>();
}

}  // namespace

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw ModelError(ErrorKind::bad_argument, "config must be a JSON object");
  RunConfig c;
  SystemParams& p = c.params;
  p.omega_c = number(j, "omega_c", false, 0.0);
  p.J = number(j, "J", true, 0.0);
  p.kappa_L = number(j, "kappa_L", true, 0.0);
  p.kappa_R = number(j, "kappa_R", true, 0.0);
  p.g = number(j, "g", true, 0.0);
  p.omega_m = number(j, "omega_m", true, 0.0);
  p.gamma = number(j, "gamma", false, 0.0);
  p.n_th = number(j, "n_th", false, 0.0);
  DriveConfig& d = c.drive;
  d.delta = number(j, "delta", true, 0.0);
  d.alpha_L = {number(j, "alpha_L_re", true, 0.0), number(j, "alpha_L_im", true, 0.0)};
  d.alpha_R = {number(j, "alpha_R_re", false, 0.0), number(j, "alpha_R_im", false, 0.0)};
  validate(p);
  validate_drive(d);
  for (const auto& [k, v] : j.items())
    if (!param_keys.count(k)) c.options[k] = v;
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError(ErrorKind::io, "cannot open config: " + path);
  json j;
  try {
    // a CSV written by write_csv carries its config on the first line
    if (in.peek() == '#') {
      std::string line;
      std::getline(in, line);
      j = json::parse(line.substr(1));
    } else {
      in >> j;
    }
  } catch (const json::exception& e) {
    throw ModelError(ErrorKind::bad_argument, std::string("malformed config: ") + e.what());
  }
  return parse_config(j);
}

json params_to_json(const SystemParams& p, const DriveConfig& d) {
  return {{"omega_c", p.omega_c},       {"J", p.J},
          {"kappa_L", p.kappa_L},       {"kappa_R", p.kappa_R},
          {"g", p.g},                   {"omega_m", p.omega_m},
          {"gamma", p.gamma},           {"n_th", p.n_th},
          {"delta", d.delta},           {"alpha_L_re", d.alpha_L.real()},
          {"alpha_L_im", d.alpha_L.imag()}, {"alpha_R_re", d.alpha_R.real()},
          {"alpha_R_im", d.alpha_R.imag()}};
}

json config_to_json(const RunConfig& c) {
  json j = params_to_json(c.params, c.drive);
  for (const auto& [k, v] : c.options.items()) j[k] = v;
  return j;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const CsvTable& t) {
  if (t.names.size() != t.columns.size())
    throw ModelError(ErrorKind::bad_argument, "column names do not match data");
  std::ofstream out(path);
  if (!out) throw ModelError(ErrorKind::io, "cannot write: " + path);
  out << "# " << t.header.dump() << '\n';
  for (std::size_t c = 0; c < t.names.size(); ++c) out << (c ? "," : "") << t.names[c];
  out << '\n';
  const std::size_t rows = t.columns.empty() ? 0 : t.columns.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < t.columns.size(); ++c)
      out << (c ? "," : "") << format_double(t.columns[c][r]);
    out << '\n';
  }
  if (!out) throw ModelError(ErrorKind::io, "write failed: " + path);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError(ErrorKind::io, "cannot open: " + path);
  CsvTable t;
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
    throw ModelError(ErrorKind::bad_argument, "missing JSON header line");
  t.header = json::parse(line.substr(2));
  if (!std::getline(in, line)) return t;
  std::stringstream names(line);
  for (std::string cell; std::getline(names, cell, ',');) t.names.push_back(cell);
  t.columns.resize(t.names.size());
  while (std::getline(in, line)) {
    std::stringstream row(line);
    std::size_t c = 0;
    for (std::string cell; std::getline(row, cell, ',') && c < t.columns.size(); ++c)
      t.columns[c].push_back(std::stod(cell));
  }
  return t;
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ModelError(ErrorKind::io, "cannot write: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace optomech
