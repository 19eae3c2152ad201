// optomech_cli: spectra, optimization, QND budgets, cooling, jump traces and
// the validation report.
//
//   optomech_cli spectrum --config run.json --out spec.csv --grid -20:20:2001
//   optomech_cli optimize --config run.json
//   optomech_cli validate --out report.json
//
// Exit codes: 0 success, 1 failed check or undefined objective, 2 bad config.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "optomech/backaction.hpp"
#include "optomech/io.hpp"
#include "optomech/kernels.hpp"
#include "optomech/noise.hpp"
#include "optomech/optimize.hpp"
#include "optomech/validation.hpp"

using namespace optomech;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_bad_config = 2;

struct Flags {
  std::string config;
  std::string out;
  std::string variant;
  std::string grid;
  std::optional<std::uint64_t> seed;
};

struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n = 0;
};

Grid parse_grid(const std::string& s) {
  const auto a = s.find(':');
  const auto b = a == std::string::npos ? a : s.find(':', a + 1);
  if (b == std::string::npos) throw ModelError(ErrorKind::bad_argument, "grid must be min:max:n");
  try {
    Grid g;
    g.lo = std::stod(s.substr(0, a));
    g.hi = std::stod(s.substr(a + 1, b - a - 1));
    const long n = std::stol(s.substr(b + 1));
    if (n < 0) throw ModelError(ErrorKind::bad_argument, "grid size must be non-negative");
    g.n = static_cast<std::size_t>(n);
    return g;
  } catch (const std::logic_error&) {
    throw ModelError(ErrorKind::bad_argument, "grid must be min:max:n");
  }
}

json grid_json(const Grid& g) { return json::array({g.lo, g.hi, g.n}); }

Grid grid_option(const json& o, const char* key) {
  const json& a = o.at(key);
  if (!a.is_array() || a.size() != 3)
    throw ModelError(ErrorKind::bad_argument, std::string(key) + " must be [min, max, n]");
  return {a[0].get<double>(), a[1].get<double>(), a[2].get<std::size_t>()};
}

std::vector<double> grid_points(const Grid& g, bool log) {
  if (g.n == 0) return {};
  if (log) {
    if (!(g.lo > 0.0 && g.hi > 0.0))
      throw ModelError(ErrorKind::bad_argument, "log grid needs positive bounds");
    return axis_points(Axis{g.lo, g.hi, true}, g.n);
  }
  return linspace(g.lo, g.hi, g.n);
}

template <class T>
T option(const RunConfig& c, const char* key, const T& fallback) {
  return c.options.contains(key) ? c.options.at(key).get<T>() : fallback;
}

// Resolve flags into options so every output embeds what was actually run.
RunConfig resolve(const Flags& f, const std::string& command) {
  if (f.config.empty()) throw ModelError(ErrorKind::bad_argument, "--config is required");
  RunConfig c = load_config(f.config);
  c.options["command"] = command;
  if (!f.variant.empty()) c.options["variant"] = to_string(variant_from_string(f.variant));
  if (!f.grid.empty()) c.options["grid"] = grid_json(parse_grid(f.grid));
  if (f.seed) c.options["seed"] = *f.seed;
  return c;
}

std::string out_path(const Flags& f, const std::string& fallback) {
  return f.out.empty() ? fallback : f.out;
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
  const std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + suffix + p.extension().string())).string();
}

double kappa_bar(const SystemParams& p) { return 0.5 * (p.kappa_L + p.kappa_R); }

void set_param(SystemParams& p, const std::string& key, double v) {
  if (key == "kappa_R") p.kappa_R = v;
  else if (key == "kappa_L") p.kappa_L = v;
  else if (key == "J") p.J = v;
  else if (key == "g") p.g = v;
  else if (key == "omega_m") p.omega_m = v;
  else throw ModelError(ErrorKind::bad_argument, "unsupported sweep key: " + key);
}

int cmd_spectrum(const Flags& f) {
  RunConfig c = resolve(f, "spectrum");
  const SystemParams& p = c.params;
  if (!c.options.contains("grid")) {
    const double span = 2.0 * p.J + 5.0 * kappa_bar(p);
    c.options["grid"] = grid_json({-span, span, 2001});
  }
  std::vector<std::string> variants;
  if (c.options.contains("variants") && f.variant.empty()) {
    variants = c.options["variants"].get<std::vector<std::string>>();
  } else {
    variants = {option<std::string>(c, "variant", "exact")};
  }
  c.options["variants"] = variants;
  c.options.erase("variant");
  const bool cold = option<bool>(c, "delta_cold", false);

  // overlays become one file per value, each embedding its own concrete config
  std::vector<RunConfig> runs;
  std::vector<std::string> paths;
  const std::string base = out_path(f, "spectrum.csv");
  if (c.options.contains("overlay")) {
    const std::string key = c.options["overlay"].at("key").get<std::string>();
    const auto values = c.options["overlay"].at("values").get<std::vector<double>>();
    RunConfig single = c;
    single.options.erase("overlay");
    for (std::size_t i = 0; i < values.size(); ++i) {
      RunConfig r = single;
      set_param(r.params, key, values[i]);
      validate(r.params);
      runs.push_back(r);
      paths.push_back(with_suffix(base, "_" + key + "_" + std::to_string(i)));
    }
  } else {
    runs.push_back(c);
    paths.push_back(base);
  }

  for (std::size_t k = 0; k < runs.size(); ++k) {
    RunConfig& r = runs[k];
    if (cold) r.drive.delta = delta_cold(r.params.omega_m, r.params.J);
    const std::vector<double> ws = grid_points(grid_option(r.options, "grid"), false);
    CsvTable t;
    t.header = config_to_json(r);
    t.names.push_back("omega");
    t.columns.push_back(ws);
    for (const auto& name : variants) {
      const Variant v = variant_from_string(name);
      const SpectrumSeries s = spectrum_series(ws, r.params, r.drive, v);
      t.names.push_back("S_" + to_string(v));
      t.columns.push_back(s.values);
    }
    write_csv(paths[k], t);
    std::printf("%s: %zu points, %zu variant(s)\n", paths[k].c_str(), ws.size(), variants.size());
  }
  return exit_ok;
}

int cmd_optimize(const Flags& f) {
  RunConfig c = resolve(f, "optimize");
  const SystemParams& p = c.params;
  const Objective obj = objective_from_string(option<std::string>(c, "objective", "s_minus"));
  const std::string var = option<std::string>(c, "variable", "delta");
  const Variant v = variant_from_string(option<std::string>(c, "variant", "exact"));
  const bool cold = option<bool>(c, "cold", false);
  const double span = 2.0 * p.J + 5.0 * kappa_bar(p);
  if (!c.options.contains("delta_range")) c.options["delta_range"] = {-span, span};
  if (!c.options.contains("J_range"))
    c.options["J_range"] = {0.01 * p.omega_m, 100.0 * p.omega_m};
  if (!c.options.contains("scan")) c.options["scan"] = 512;
  c.options["variable"] = var;
  c.options["variant"] = to_string(v);

  std::size_t scan = c.options["scan"].get<std::size_t>();
  auto dr = c.options["delta_range"].get<std::vector<double>>();
  auto jr = c.options["J_range"].get<std::vector<double>>();
  if (c.options.contains("grid")) {
    const Grid g = grid_option(c.options, "grid");
    (var == "J" ? jr : dr) = {g.lo, g.hi};
    scan = g.n;
  }
  if (scan < 512) throw ModelError(ErrorKind::bad_argument, "scan needs at least 512 points per axis");
  const Axis ad{dr.at(0), dr.at(1), false};
  const Axis aj{jr.at(0), jr.at(1), option<bool>(c, "log_J", true)};

  std::optional<Optimum> o;
  if (var == "delta") {
    o = minimize_1d(objective_in_delta(obj, p, c.drive, v), ad, scan);
  } else if (var == "J") {
    o = minimize_1d(objective_in_j(obj, p, c.drive, v, cold), aj, scan);
  } else if (var == "both") {
    o = minimize_2d(objective_in_delta_j(obj, p, c.drive, v), ad, aj, scan);
  } else {
    throw ModelError(ErrorKind::bad_argument, "variable must be delta, J or both");
  }

  json rec{{"config", config_to_json(c)}};
  if (!o) {
    rec["error"] = "objective undefined over the whole range";
    std::cerr << "optimize: objective undefined over the whole range\n";
  } else {
    rec["result"] = {{"x", o->x},          {"f", o->f},           {"scan_x", o->scan_x},
                     {"scan_f", o->scan_f}, {"evaluations", o->evaluations}};
    if (var == "both") {
      rec["result"]["y"] = o->y;
      rec["result"]["scan_y"] = o->scan_y;
    }
    rec["reference"] = {{"delta_cold", delta_cold(p.omega_m, p.J)}};
  }
  if (!f.out.empty()) write_json(f.out, rec);
  std::cout << rec.dump(2) << '\n';
  return o ? exit_ok : exit_failed;
}

int cmd_qnd(const Flags& f) {
  RunConfig c = resolve(f, "qnd");
  const std::string axis = option<std::string>(c, "axis", "omega_m");
  const bool log = option<bool>(c, "log", true);
  const int n_max = option<int>(c, "n_max", 3);
  const Variant v = variant_from_string(option<std::string>(c, "variant", "exact"));
  if (!c.options.contains("grid"))
    c.options["grid"] = grid_json({0.01 * c.params.kappa_L, 10.0 * c.params.kappa_L, 200});
  c.options["axis"] = axis;
  c.options["variant"] = to_string(v);
  const std::vector<double> xs = grid_points(grid_option(c.options, "grid"), log);
  if (xs.empty()) throw ModelError(ErrorKind::bad_argument, "empty sweep grid");

  std::vector<QndBudget> budgets(xs.size());
  map_range(
      xs.size(),
      [&](std::size_t i) {
        SystemParams p = c.params;
        set_param(p, axis, xs[i]);
        budgets[i] = qnd_budget(p, c.drive, n_max, v);
        return budgets[i].ratio;
      },
      Exec::parallel);

  CsvTable t;
  t.header = config_to_json(c);
  t.names = {axis, "tau_meas"};
  t.columns = {xs, {}};
  for (const auto& b : budgets) t.columns[1].push_back(b.tau_meas);
  for (int n = 0; n <= n_max; ++n) {
    t.names.push_back("tau_ba_" + std::to_string(n));
    t.columns.emplace_back();
    for (const auto& b : budgets) t.columns.back().push_back(b.tau_ba[static_cast<std::size_t>(n)]);
  }
  t.names.push_back("ratio");
  t.columns.emplace_back();
  for (const auto& b : budgets) t.columns.back().push_back(b.ratio);
  const std::string path = out_path(f, "qnd.csv");
  write_csv(path, t);
  std::printf("%s: %zu points along %s\n", path.c_str(), xs.size(), axis.c_str());
  return exit_ok;
}

json cooling_json(const CoolingResult& r) {
  return {{"gamma_opt", r.gamma_opt}, {"n_eff", r.n_eff}, {"s_plus", r.s_plus},
          {"s_minus", r.s_minus}};
}

int cmd_cool(const Flags& f) {
  RunConfig c = resolve(f, "cool");
  const Variant v = variant_from_string(option<std::string>(c, "variant", "exact"));
  c.options["variant"] = to_string(v);
  const SystemParams& p = c.params;
  DriveConfig cold = c.drive;
  cold.delta = delta_cold(p.omega_m, p.J);
  cold.alpha_R = 0.0;

  const CoolingResult ex = cooling_figures(p, c.drive, v);
  const CoolingResult ec = cooling_figures(p, cold, v);
  const CoolingResult sk = cooling_small_kr(p, c.drive);
  json rec{{"config", config_to_json(c)},
           {"exact", cooling_json(ex)},
           {"exact_at_delta_cold", cooling_json(ec)},
           {"small_kappa_R", cooling_json(sk)},
           {"difference",
            {{"gamma_opt", sk.gamma_opt - ec.gamma_opt}, {"n_eff", sk.n_eff - ec.n_eff}}}};
  if (!f.out.empty()) write_json(f.out, rec);
  std::cout << rec.dump(2) << '\n';
  return exit_ok;
}

void write_trace(const std::string& path, const json& header, const JumpTrace& tr) {
  CsvTable s;
  s.header = header;
  s.names = {"t", "n"};
  s.columns = {tr.times, std::vector<double>(tr.n_true.begin(), tr.n_true.end())};
  write_csv(path, s);

  CsvTable w;
  w.header = header;
  w.names = {"window_start", "signal"};
  w.columns = {tr.window_start, tr.signal};
  write_csv(with_suffix(path, "_windows"), w);

  CsvTable j;
  j.header = header;
  j.names = {"t", "level"};
  j.columns = {tr.jump_times, std::vector<double>(tr.levels.begin(), tr.levels.end())};
  write_csv(with_suffix(path, "_jumps"), j);
}

int cmd_jumps(const Flags& f) {
  RunConfig c = resolve(f, "jumps");
  const std::string regime = option<std::string>(c, "regime", "config");
  const double duration = option<double>(c, "duration", 12.0);  // in τ_meas
  const auto seed = option<std::uint64_t>(c, "seed", 1);
  const Variant v = variant_from_string(option<std::string>(c, "variant", "exact"));
  c.options["regime"] = regime;
  c.options["duration"] = duration;
  c.options["seed"] = seed;
  c.options["variant"] = to_string(v);
  const json header = config_to_json(c);
  const std::string base = out_path(f, "jumps.csv");

  struct Job {
    std::string suffix;
    JumpRegime r;
  };
  std::vector<Job> jobs;
  if (regime == "none") jobs = {{"", JumpRegime::no_backaction}};
  else if (regime == "ba0") jobs = {{"", JumpRegime::ba0_twice_meas}};
  else if (regime == "ba1") jobs = {{"", JumpRegime::ba1_half_meas}};
  else if (regime == "all")
    jobs = {{"_none", JumpRegime::no_backaction},
            {"_ba0", JumpRegime::ba0_twice_meas},
            {"_ba1", JumpRegime::ba1_half_meas}};
  else if (regime != "config")
    throw ModelError(ErrorKind::bad_argument, "regime must be config, none, ba0, ba1 or all");

  auto report = [](const std::string& path, const JumpTrace& tr) {
    const TraceStats s = analyse_trace(tr);
    std::printf("%s: %d jumps, %d plateaus, mean signal %.4f\n", path.c_str(), s.jumps,
                s.plateaus, s.mean_signal);
  };
  if (jobs.empty()) {
    const SteadyState ss = solve_steady_state(c.params, c.drive);
    const double tm = tau_meas(c.params, ss);
    if (!std::isfinite(tm)) throw ModelError(ErrorKind::regime, "measurement time is infinite");
    const JumpTrace tr = simulate_jumps(c.params, c.drive, duration * tm, seed, v);
    write_trace(base, header, tr);
    report(base, tr);
  }
  for (const Job& j : jobs) {
    const RegimeSetup s = jump_regime(j.r);
    const JumpTrace tr = simulate_jumps(s.rates, duration * s.rates.tau_meas, seed);
    const std::string path = with_suffix(base, j.suffix);
    write_trace(path, header, tr);
    report(path, tr);
  }
  return exit_ok;
}

int cmd_validate(const Flags& f) {
  const std::vector<CheckResult> checks = validation_suite();
  bool all = true;
  for (const auto& c : checks) {
    std::printf("[%s] %-28s observed=%-12.5g tol=%-10.3g %s\n", c.passed ? "PASS" : "FAIL",
                c.name.c_str(), c.observed, c.tolerance, c.detail.c_str());
    all = all && c.passed;
  }
  const json report = report_json(checks);
  if (!f.out.empty()) write_json(f.out, report);
  return all ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Backaction noise of an asymmetric two-mode optomechanical cavity"};
  app.require_subcommand(1);
  Flags flags;

  auto add_common = [&](CLI::App* sub, bool config) {
    if (config) sub->add_option("--config", flags.config, "JSON config or CSV with embedded config");
    sub->add_option("--out", flags.out, "Output path");
    return sub;
  };
  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--variant", flags.variant, "exact | large-j | one-port | generic");
    sub->add_option("--grid", flags.grid, "min:max:n");
  };

  std::vector<std::pair<CLI::App*, int (*)(const Flags&)>> subs;
  CLI::App* spectrum = add_common(app.add_subcommand("spectrum", "Write S_FF spectra"), true);
  add_model(spectrum);
  subs.emplace_back(spectrum, cmd_spectrum);
  CLI::App* optimize = add_common(app.add_subcommand("optimize", "Minimize over delta and/or J"), true);
  add_model(optimize);
  subs.emplace_back(optimize, cmd_optimize);
  CLI::App* qnd = add_common(app.add_subcommand("qnd", "Measurement vs backaction times"), true);
  add_model(qnd);
  subs.emplace_back(qnd, cmd_qnd);
  CLI::App* cool = add_common(app.add_subcommand("cool", "Cooling rate and phonon number"), true);
  cool->add_option("--variant", flags.variant, "exact | large-j | one-port | generic");
  subs.emplace_back(cool, cmd_cool);
  CLI::App* jumps = add_common(app.add_subcommand("jumps", "Simulate phonon jump traces"), true);
  jumps->add_option("--variant", flags.variant, "exact | large-j | one-port | generic");
  jumps->add_option("--seed", flags.seed, "RNG seed");
  subs.emplace_back(jumps, cmd_jumps);
  CLI::App* val = add_common(app.add_subcommand("validate", "Run the validation suite"), false);
  subs.emplace_back(val, cmd_validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_bad_config;
  }

  try {
    for (const auto& [sub, run] : subs)
      if (sub->parsed()) return run(flags);
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_bad_config;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad option: " << e.what() << '\n';
    return exit_bad_config;
  }
  return exit_bad_config;
}
