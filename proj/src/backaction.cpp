#include "optomech/backaction.hpp"

#include <cmath>
#include <limits>

namespace optomech {

CoolingResult cooling_from_spectra(double s_plus, double s_minus) {
  const double gam = s_plus - s_minus;
  if (!(std::abs(gam) > 1e-13 * (std::abs(s_plus) + std::abs(s_minus))))
    throw ModelError(ErrorKind::no_net_damping, "no net optical damping");
  return {gam, s_minus / gam, s_plus, s_minus};
}

CoolingResult cooling_figures(const SystemParams& p, const DriveConfig& d, Variant v) {
  const NoiseModel model(p, d);
  return cooling_from_spectra(model.sff(p.omega_m, v), model.sff(-p.omega_m, v));
}

double delta_cold(double omega_m, double J) {
  const double h = 0.5 * omega_m;
  // ω_m/2 + J − sqrt(J² + ω_m²/4) without cancellation
  return h - h * h / (J + std::sqrt(J * J + h * h));
}

double n_eff_small_kr_over_kr(const SystemParams& p) {
  const double x = p.omega_m / (2.0 * p.J);
  const double q = std::sqrt(1.0 + x * x);
  const double a = q - 5.0 / 3.0 * x;
  const double b = q - 3.0 * x;
  return 2.25 * a * a / p.kappa_L + b * b * p.kappa_L / (16.0 * p.omega_m * p.omega_m);
}

CoolingResult cooling_small_kr(const SystemParams& p, const DriveConfig& d) {
  DriveConfig dc = d;
  dc.delta = delta_cold(p.omega_m, p.J);
  dc.alpha_R = 0.0;
  const SteadyState ss = solve_steady_state(p, dc);
  const double per_kr = n_eff_small_kr_over_kr(p);
  const double n = per_kr * p.kappa_R;
  const double dc2 = dc.delta * dc.delta;
  const double gam =
      2.0 * ss.G * ss.G / (p.J * p.J) * dc2 / (p.omega_m * p.omega_m * per_kr);
  return {gam, n, gam * (n + 1.0), gam * n};
}

double tau_meas(const SystemParams& p, const SteadyState& ss) {
  const double den = ss.G * ss.G * p.g * p.g;
  if (den == 0.0) return std::numeric_limits<double>::infinity();
  return p.J * p.J * p.kappa_L / den;
}

double ba_rate(int n, double s_minus, double s_plus) {
  if (n < 0) throw ModelError(ErrorKind::bad_argument, "negative Fock index");
  return (1.0 + n) * s_minus + n * s_plus;
}

double tau_ba(int n, const SystemParams& p, const DriveConfig& d, Variant v) {
  const NoiseModel model(p, d);
  const double sm = model.sff(-p.omega_m, v), sp = model.sff(p.omega_m, v);
  const double rate = ba_rate(n, sm, sp);
  // squared amplitude cancellation leaves ~eps² residue
  if (rate <= 1e-28 * (sm + sp)) return std::numeric_limits<double>::infinity();
  return 1.0 / rate;
}

double linear_noise_bracket(const SystemParams& p) {
  const double kb = 0.5 * (p.kappa_L + p.kappa_R);
  const double h = 0.5 * kb;
  const double w2 = p.omega_m * p.omega_m;
  return (h * w2 + p.kappa_R * h * h) / (w2 + h * h);
}

double linear_noise_rate(int n, const SystemParams& p, double G) {
  return G * G / (p.J * p.J) * linear_noise_bracket(p) * (n + 0.5);
}

QndBudget qnd_budget(const SystemParams& p, const DriveConfig& d, int n_max, Variant v) {
  DriveConfig d0 = d;
  d0.delta = 0.0;
  const NoiseModel model(p, d0);
  const double sm = model.sff(-p.omega_m, v);
  const double sp = model.sff(p.omega_m, v);
  QndBudget b;
  b.tau_meas = tau_meas(p, model.steady());
  for (int n = 0; n <= n_max; ++n) {
    const double r = ba_rate(n, sm, sp);
    b.tau_ba.push_back(r <= 1e-28 * (sm + sp) ? std::numeric_limits<double>::infinity() : 1.0 / r);
  }
  const double r1 = ba_rate(1, sm, sp);
  b.ratio = std::isinf(b.tau_meas) ? std::numeric_limits<double>::infinity() : b.tau_meas * r1;
  return b;
}

double qnd_ratio(const SystemParams& p, const DriveConfig& d) {
  return qnd_budget(p, d, 1).ratio;
}

}  // namespace optomech
