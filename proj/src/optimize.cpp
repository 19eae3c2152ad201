#include "optomech/optimize.hpp"

#include <cmath>
#include <limits>

#include "optomech/backaction.hpp"

namespace optomech {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr double inv_phi = 0.6180339887498949;

double to_u(const Axis& ax, double x) { return ax.log ? std::log(x) : x; }
double from_u(const Axis& ax, double u) { return ax.log ? std::exp(u) : u; }

double finite_or_inf(double v) { return std::isfinite(v) ? v : std::numeric_limits<double>::infinity(); }

// Golden section in the axis variable u over [a, b].
double golden(const std::function<double(double)>& g, double a, double b, double tol,
              std::size_t& evals, double& fbest) {
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = finite_or_inf(g(c)), fd = finite_or_inf(g(d));
  evals += 2;
  for (int it = 0; it < 400 && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = finite_or_inf(g(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = finite_or_inf(g(d));
    }
    ++evals;
  }
  if (fc <= fd) {
    fbest = fc;
    return c;
  }
  fbest = fd;
  return d;
}

double tol_for(const Axis& ax, double u, double rel_tol) {
  // relative tolerance on the variable itself
  if (ax.log) return rel_tol;
  return rel_tol * std::max(std::abs(u), 1e-300) + 1e-300;
}

}  // namespace

std::vector<double> axis_points(const Axis& ax, std::size_t n) {
  if (n < 2) throw ModelError(ErrorKind::bad_argument, "scan needs at least two points");
  if (!(ax.hi > ax.lo) || (ax.log && ax.lo <= 0.0))
    throw ModelError(ErrorKind::bad_argument, "invalid search bounds");
  std::vector<double> u = linspace(to_u(ax, ax.lo), to_u(ax, ax.hi), n);
  for (auto& v : u) v = from_u(ax, v);
  u.front() = ax.lo;
  u.back() = ax.hi;
  return u;
}

std::optional<Optimum> minimize_1d(const std::function<double(double)>& f, const Axis& ax,
                                   std::size_t n_scan, double rel_tol, Exec exec) {
  const std::vector<double> xs = axis_points(ax, n_scan);
  const std::vector<double> fs = sweep(xs, f, exec);
  std::size_t best = n_scan;
  for (std::size_t i = 0; i < n_scan; ++i)
    if (std::isfinite(fs[i]) && (best == n_scan || fs[i] < fs[best])) best = i;
  if (best == n_scan) return std::nullopt;

  Optimum o;
  o.scan_x = xs[best];
  o.scan_f = fs[best];
  o.evaluations = n_scan;
  const double a = to_u(ax, xs[best > 0 ? best - 1 : 0]);
  const double b = to_u(ax, xs[best + 1 < n_scan ? best + 1 : best]);
  double fg = 0.0;
  const double ug = golden([&](double u) { return f(from_u(ax, u)); }, a, b,
                           tol_for(ax, to_u(ax, xs[best]), rel_tol), o.evaluations, fg);
  if (fg < o.scan_f) {
    o.x = from_u(ax, ug);
    o.f = fg;
  } else {
    o.x = o.scan_x;
    o.f = o.scan_f;
  }
  return o;
}

std::optional<Optimum> minimize_2d(const std::function<double(double, double)>& f,
                                   const Axis& ax, const Axis& ay, std::size_t n_scan,
                                   double rel_tol, Exec exec) {
  const std::vector<double> xs = axis_points(ax, n_scan);
  const std::vector<double> ys = axis_points(ay, n_scan);
  const std::vector<double> fs = map_range(
      n_scan * n_scan, [&](std::size_t k) { return f(xs[k / n_scan], ys[k % n_scan]); }, exec);
  std::size_t best = fs.size();
  for (std::size_t k = 0; k < fs.size(); ++k)
    if (std::isfinite(fs[k]) && (best == fs.size() || fs[k] < fs[best])) best = k;
  if (best == fs.size()) return std::nullopt;

  const std::size_t ix = best / n_scan, iy = best % n_scan;
  Optimum o;
  o.scan_x = xs[ix];
  o.scan_y = ys[iy];
  o.scan_f = fs[best];
  o.evaluations = fs.size();
  double x = o.scan_x, y = o.scan_y, fx = o.scan_f;
  double ax_lo = to_u(ax, xs[ix > 0 ? ix - 1 : 0]), ax_hi = to_u(ax, xs[std::min(ix + 1, n_scan - 1)]);
  double ay_lo = to_u(ay, ys[iy > 0 ? iy - 1 : 0]), ay_hi = to_u(ay, ys[std::min(iy + 1, n_scan - 1)]);
  for (int round = 0; round < 50; ++round) {
    const double px = x, py = y;
    double fg = 0.0;
    const double ux = golden([&](double u) { return f(from_u(ax, u), y); }, ax_lo, ax_hi,
                             tol_for(ax, to_u(ax, x), rel_tol), o.evaluations, fg);
    if (fg < fx) {
      x = from_u(ax, ux);
      fx = fg;
    }
    const double uy = golden([&](double u) { return f(x, from_u(ay, u)); }, ay_lo, ay_hi,
                             tol_for(ay, to_u(ay, y), rel_tol), o.evaluations, fg);
    if (fg < fx) {
      y = from_u(ay, uy);
      fx = fg;
    }
    if (std::abs(x - px) <= rel_tol * std::abs(x) && std::abs(y - py) <= rel_tol * std::abs(y))
      break;
  }
  o.x = x;
  o.y = y;
  o.f = fx;
  return o;
}

Objective objective_from_string(const std::string& s) {
  if (s == "s_minus") return Objective::s_minus;
  if (s == "n_eff") return Objective::n_eff;
  throw ModelError(ErrorKind::bad_argument, "unknown objective: " + s);
}

double evaluate_objective(Objective obj, const SystemParams& p, const DriveConfig& d, Variant v) {
  const NoiseModel m(p, d);
  const double sm = m.sff(-p.omega_m, v);
  if (obj == Objective::s_minus) {
    const double G = m.steady().G;
    return G > 0.0 ? sm / (G * G) : nan;
  }
  const double gam = m.sff(p.omega_m, v) - sm;
  return gam > 0.0 ? sm / gam : nan;
}

namespace {

// Degenerate points inside a scan are undefined, not fatal.
double guarded(Objective obj, const SystemParams& p, const DriveConfig& d, Variant v) {
  try {
    return evaluate_objective(obj, p, d, v);
  } catch (const ModelError&) {
    return nan;
  }
}

}  // namespace

std::function<double(double)> objective_in_delta(Objective obj, const SystemParams& p,
                                                 const DriveConfig& d, Variant v) {
  return [=](double delta) {
    DriveConfig dd = d;
    dd.delta = delta;
    return guarded(obj, p, dd, v);
  };
}

std::function<double(double)> objective_in_j(Objective obj, const SystemParams& p,
                                             const DriveConfig& d, Variant v, bool cold) {
  return [=](double J) {
    SystemParams pp = p;
    pp.J = J;
    DriveConfig dd = d;
    if (cold) dd.delta = delta_cold(p.omega_m, J);
    return guarded(obj, pp, dd, v);
  };
}

std::function<double(double, double)> objective_in_delta_j(Objective obj, const SystemParams& p,
                                                           const DriveConfig& d, Variant v) {
  return [=](double delta, double J) {
    SystemParams pp = p;
    pp.J = J;
    DriveConfig dd = d;
    dd.delta = delta;
    return guarded(obj, pp, dd, v);
  };
}

}  // namespace optomech
