#include "optomech/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "optomech/backaction.hpp"
#include "optomech/measurement.hpp"
#include "optomech/optimize.hpp"
#include "optomech/oracle.hpp"
#include "optomech/tolerances.hpp"

namespace optomech {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double rel_diff(const NoiseAmplitudes& a, const NoiseAmplitudes& b) {
  const double scale = std::max(std::abs(b.a_L), std::abs(b.a_R));
  return std::max(std::abs(a.a_L - b.a_L), std::abs(a.a_R - b.a_R)) / scale;
}

CheckResult bounded(std::string name, double observed, double tolerance, std::string detail = {}) {
  return {std::move(name), tolerance, observed, observed < tolerance, std::move(detail)};
}

SystemParams left_device(double kL, double kR, double J, double omega_m, double g = 0.1) {
  SystemParams p;
  p.kappa_L = kL;
  p.kappa_R = kR;
  p.J = J;
  p.omega_m = omega_m;
  p.g = g;
  return p;
}

DriveConfig left_drive(double delta) {
  DriveConfig d;
  d.delta = delta;
  d.alpha_L = 1.0;
  return d;
}

}  // namespace

double log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

CheckResult check_oracle_ring(const ValidationHooks& hooks) {
  const auto t0 = clock_type::now();
  const AmplitudeFn exact = hooks.exact ? hooks.exact : AmplitudeFn(amplitudes_exact);
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double eo = 0.0, go = 0.0, ge = 0.0;
  for (std::size_t i = 0; i < tol::oracle_ring_draws; ++i) {
    SystemParams p;
    p.kappa_L = 1.0;
    p.kappa_R = i == 0 ? 0.0 : (i == 1 ? 1.0 : u(rng));
    const double kb = 0.5 * (p.kappa_L + p.kappa_R);
    p.J = kb * std::pow(10.0, -1.0 + 3.0 * u(rng));
    p.g = 0.05 + u(rng);
    p.omega_m = 1.0;
    DriveConfig d;
    d.delta = kb * (-5.0 + 10.0 * u(rng));
    d.alpha_L = std::polar(0.2 + u(rng), 2.0 * std::numbers::pi * u(rng));
    d.alpha_R = std::polar(u(rng), 2.0 * std::numbers::pi * u(rng));
    const double w = (2.0 * u(rng) - 1.0) * (2.0 * p.J + 5.0 * kb);

    eo = std::max(eo, rel_diff(exact(w, p, d), oracle::freq_solve(w, p, d)));
    DriveConfig dl = d;
    dl.alpha_R = 0.0;
    const NoiseAmplitudes ol = oracle::freq_solve(w, p, dl);
    const NoiseAmplitudes gl = NoiseModel(p, dl).generic(w);
    go = std::max(go, rel_diff(gl, ol));
    ge = std::max(ge, rel_diff(gl, exact(w, p, dl)));
  }
  const double t = seconds_since(t0);
  const double worst = std::max({eo, go, ge});
  CheckResult r = bounded("oracle_ring", worst, tol::oracle_ring_rel);
  r.passed = r.passed && t < tol::oracle_ring_seconds;
  r.detail = fmt("exact~oracle %.2e, ", eo) + fmt("generic~oracle %.2e, ", go) +
             fmt("generic~exact %.2e, ", ge) + fmt("%.2f s", t);
  return r;
}

CheckResult check_oneport_cancellation() {
  const auto t0 = clock_type::now();
  double worst = 0.0;
  for (double J : {0.1, 0.3, 1.0, 3.0, 10.0, 100.0})
    for (double wm : {0.1, 1.0}) {
      const SystemParams p = left_device(1.0, 0.0, J, wm);
      const NoiseModel m(p, left_drive(delta_cold(wm, J)));
      worst = std::max(worst, m.sff(-wm, Variant::exact) / m.sff(wm, Variant::exact));
    }
  const double t = seconds_since(t0);
  CheckResult r = bounded("oneport_cancellation", worst, tol::oneport_null_ratio,
                          fmt("max S(-wm)/S(+wm) %.2e, ", worst) + fmt("%.3f s", t));
  r.passed = r.passed && t < tol::oneport_seconds;
  return r;
}

CheckResult check_min_sff() {
  const double kL = 1.0, kR = 0.3, kb = 0.5 * (kL + kR), wm = 0.2 * kb;
  std::vector<double> js, res;
  double at100 = 0.0;
  for (double jr : {30.0, 100.0, 300.0}) {
    const SystemParams p = left_device(kL, kR, jr * kb, wm);
    const NoiseModel m(p, left_drive(0.5 * wm));
    const double G = m.steady().G;
    const double pred = G * G * kR / (2.0 * p.J * p.J);
    const double rel = m.sff(-wm, Variant::exact) / pred - 1.0;
    js.push_back(p.J);
    res.push_back(rel);
    if (jr == 100.0) at100 = std::abs(rel);
  }
  const double slope = log_slope(js, res);
  CheckResult r = bounded("min_sff", at100, tol::min_sff_rel);
  r.passed = r.passed && std::abs(slope + 1.0) <= tol::order_one_band;
  r.detail = fmt("rel residual at J=100kb %.2e, ", at100) + fmt("residual ~ J^%.3f", slope);
  return r;
}

namespace {

struct Extremum {
  double omega;
  bool maximum;
};

std::vector<Extremum> local_extrema(const NoiseModel& m, double lo, double hi, std::size_t n) {
  const std::vector<double> ws = linspace(lo, hi, n);
  const std::vector<double> s = sff_grid(m, ws, Variant::exact, Exec::parallel);
  std::vector<Extremum> out;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const bool mx = s[i] > s[i - 1] && s[i] >= s[i + 1];
    const bool mn = s[i] < s[i - 1] && s[i] <= s[i + 1];
    if (!mx && !mn) continue;
    // refine inside the bracketing cells
    const double sign = mx ? -1.0 : 1.0;
    const auto o = minimize_1d([&](double w) { return sign * m.sff(w, Variant::exact); },
                               Axis{ws[i - 1], ws[i + 1], false}, 16, 1e-10, Exec::serial);
    out.push_back({o ? o->x : ws[i], mx});
  }
  return out;
}

}  // namespace

CheckResult check_spectrum_shape() {
  const double kL = 1.0;
  std::string detail;
  double worst_ratio = 0.0;
  bool ok = true;
  for (double kR : {kL, kL / 4.0, 0.0}) {
    const double kb = 0.5 * (kL + kR), dk = 0.5 * (kL - kR);
    const SystemParams p = left_device(kL, kR, 10.0 * kb, 0.1);
    const NoiseModel m(p, left_drive(0.0));
    const double w5 = 5.0 * kb;
    const double bg = 0.5 * (m.sff(w5, Variant::exact) + m.sff(-w5, Variant::exact));
    const double ratio = m.sff(0.0, Variant::exact) / bg;
    // bracket of the large-J closed form at ω = 5κ̄ with Λ = 1, δ = 0
    const double bracket_bg =
        kL * kR / (kb * kb) +
        std::norm(cplx(dk / kb * w5, 0.5 * kb * (1.0 - dk / kb))) / std::norm(cplx(w5, 0.5 * kb));
    const double target = kL * kR / (kb * kb) / bracket_bg;

    char buf[160];
    if (kR > 0.0) {
      const double rel = std::abs(ratio / target - 1.0);
      worst_ratio = std::max(worst_ratio, rel);
      ok = ok && rel < tol::spectrum_shape_ratio_rel;
      std::snprintf(buf, sizeof buf, "kR=%.2f: S0/bg %.4f vs %.4f; ", kR, ratio, target);
    } else {
      ok = ok && ratio < tol::spectrum_shape_null_ratio;
      std::snprintf(buf, sizeof buf, "kR=0: S0/bg %.2e; ", ratio);
    }
    detail += buf;

    const double J = p.J;
    const auto ext = local_extrema(m, -J, 3.0 * J, 8001);
    double near0 = std::numeric_limits<double>::infinity();
    double near2j = std::numeric_limits<double>::quiet_NaN(), best = -1.0;
    for (const auto& e : ext) {
      if (std::abs(e.omega) < std::abs(near0)) near0 = e.omega;
      if (e.maximum && e.omega > J) {
        const double v = m.sff(e.omega, Variant::exact);
        if (v > best) {
          best = v;
          near2j = e.omega;
        }
      }
    }
    const double span = 2.0 * J;
    const bool peaks = std::abs(near0) < tol::spectrum_shape_peak_rel * span &&
                       std::abs(near2j - span) < tol::spectrum_shape_peak_rel * span;
    ok = ok && peaks;
    std::snprintf(buf, sizeof buf, "peaks %.3f, %.3f (2J=%.1f)%s", near0, near2j, span,
                  kR > 0.0 ? "; " : "");
    detail += buf;
  }
  return {"spectrum_shape", tol::spectrum_shape_ratio_rel, worst_ratio, ok, detail};
}

CheckResult check_cooling_optimum_j() {
  const double kL = 1.0, kR = kL / 20.0, wm = kL / 4.0;
  const SystemParams p = left_device(kL, kR, wm, wm);
  const auto obj = objective_in_j(Objective::n_eff, p, left_drive(0.0), Variant::exact, true);
  const Axis ax{0.01 * wm, 100.0 * wm, true};
  const auto o = minimize_1d(obj, ax, tol::cooling_optimum_scan);
  if (!o) return {"cooling_optimum_j", 0.0, 0.0, false, "n_eff undefined over the scan"};
  const bool interior = o->scan_x > ax.lo && o->scan_x < ax.hi;
  const double ratio = o->x / wm;
  const bool ok = interior && ratio > tol::cooling_optimum_j_lo && ratio < tol::cooling_optimum_j_hi;
  return {"cooling_optimum_j", tol::cooling_optimum_j_hi, ratio, ok,
          fmt("J*/wm %.4f, ", ratio) + fmt("n_eff(J*) %.4f", o->f)};
}

CheckResult check_linear_noise() {
  double worst = 0.0;
  for (double kR : {0.0, 0.3, 1.0}) {
    const double kL = 1.0, kb = 0.5 * (kL + kR);
    for (double wr : {0.1, 0.3, 1.0})
      for (double jr : {10.0, 30.0, 100.0}) {
        const SystemParams p = left_device(kL, kR, jr * kb, wr * kb);
        const NoiseModel m(p, left_drive(0.0));
        const double sm = m.sff(-p.omega_m, Variant::exact);
        const double sp = m.sff(p.omega_m, Variant::exact);
        for (int n : {0, 1}) {
          const double rel =
              std::abs(ba_rate(n, sm, sp) / linear_noise_rate(n, p, m.steady().G) - 1.0);
          worst = std::max(worst, rel * jr);
        }
      }
  }
  bool bracket_ok = true;
  const double kb = 1.0;
  for (double wm : axis_points(Axis{0.01 * kb, 100.0 * kb, true}, 401)) {
    const double b = linear_noise_bracket(left_device(kb, kb, 10.0, wm));
    bracket_ok = bracket_ok && b >= 0.5 * kb * (1.0 - 1e-12) && b <= kb * (1.0 + 1e-12);
  }
  CheckResult r = bounded("linear_noise", worst, tol::linear_noise_coeff,
                          fmt("max rel.err x J/kb %.3f, ", worst) +
                              (bracket_ok ? "symmetric prefactor in [1/2, 1]"
                                          : "symmetric prefactor outside [1/2, 1]"));
  r.passed = r.passed && bracket_ok;
  return r;
}

CheckResult check_cooling_expansion() {
  const double wm = 1.0, J = 2.0 * wm, kL = 0.5 * wm;
  std::vector<double> rs, errs;
  std::string gam;
  bool finite = true;
  for (double r : {1e-2, 1e-3, 1e-4}) {
    const SystemParams p = left_device(kL, r * kL, J, wm);
    DriveConfig d = left_drive(delta_cold(wm, J));
    const CoolingResult ex = cooling_figures(p, d, Variant::exact);
    const CoolingResult ap = cooling_small_kr(p, d);
    rs.push_back(r);
    errs.push_back(ap.n_eff / ex.n_eff - 1.0);
    const double gr = ap.gamma_opt / ex.gamma_opt;
    finite = finite && std::isfinite(gr);
    gam += fmt("%.6f ", gr);
  }
  const double slope = log_slope(rs, errs);
  const bool ok = std::abs(slope - 1.0) <= tol::order_one_band && finite;
  return {"cooling_expansion", tol::order_one_band, std::abs(slope - 1.0), ok,
          fmt("n_eff rel.err ~ kR^%.3f, ", slope) + "expansion/exact Gamma " + gam};
}

CheckResult check_response_kernel() {
  // lossless two-port transfer
  SystemParams p = left_device(1.0, 0.6, 3.0, 0.5);
  DriveConfig d = left_drive(0.4);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  double defect = 0.0;
  for (int i = 0; i < 100; ++i)
    defect = std::max(defect, unitarity_defect(output_transfer(u(rng), p, d).b_matrix));

  // left-drive kernel case
  const SystemParams q = left_device(1.0, 0.5, 50.0, 0.1);
  const DriveConfig d0 = left_drive(0.0);
  const double weight = kernel_large_j(0.0, q, d0).impulse_weight;
  const double cancel = std::abs(kernel_resonant_integral(q, d0) + weight) / std::abs(weight);

  const double kb = 0.75;
  const TimeSeries ts = resonant_kernel_by_fft(q, d0, 80.0 / kb, 1 << 16);
  std::vector<double> taus, vals;
  double fft_err = 0.0;
  const double peak = kernel_large_j(0.0, q, d0).resonant;
  for (std::size_t i = 0; i < ts.t.size() && ts.t[i] <= 10.0 / kb; ++i) {
    taus.push_back(ts.t[i]);
    vals.push_back(ts.value[i].real());
    fft_err = std::max(fft_err, std::abs(ts.value[i] - kernel_large_j(ts.t[i], q, d0).resonant));
  }
  fft_err /= peak;
  const double rate = fit_decay_rate(taus, vals);
  const double rate_err = std::abs(rate / (0.5 * kb) - 1.0);

  const bool ok = defect < tol::unitarity && cancel < tol::kernel_cancellation &&
                  rate_err < tol::kernel_decay_rel && fft_err < tol::kernel_fft_abs;
  return {"response_kernel", tol::unitarity, defect, ok,
          fmt("unitarity %.2e, ", defect) + fmt("zero-integral %.2e, ", cancel) +
              fmt("decay fit rel %.2e, ", rate_err) + fmt("fft kernel err %.2e", fft_err)};
}

CheckResult check_monte_carlo(std::uint64_t seed) {
  const auto t0 = clock_type::now();
  SystemParams p = left_device(1.0, 0.4, 1.5, 0.3, 0.1);
  DriveConfig d = left_drive(0.3);
  d.alpha_R = cplx(0.4, -0.2);
  const double kb = 0.5 * (p.kappa_L + p.kappa_R);
  oracle::SimOptions o;
  o.dt = tol::welch_dt / oracle::max_rate(p, d);
  o.n_steps = static_cast<std::size_t>(std::ceil(tol::welch_record / kb / o.dt));
  o.seed = seed;
  const oracle::TrajectoryBundle b = oracle::simulate(p, d, o);
  const oracle::TransferEstimate e = oracle::estimate_transfer(b);
  const NoiseModel m(p, d);
  const double band = 2.0 * p.J + 2.0 * kb;
  std::size_t total = 0, inside = 0;
  for (std::size_t k = 0; k < e.L.omega.size(); ++k) {
    const double w = e.L.omega[k];
    if (std::abs(w) > band) continue;
    const NoiseAmplitudes a = m.exact(w);
    total += 2;
    inside += std::abs(e.L.H[k] - a.a_L) <= tol::welch_sigma * e.L.sigma[k];
    inside += std::abs(e.R.H[k] - a.a_R) <= tol::welch_sigma * e.R.sigma[k];
  }
  const double frac = static_cast<double>(inside) / static_cast<double>(total);
  const double t = seconds_since(t0);
  const bool ok = frac >= tol::welch_fraction && t < tol::welch_seconds;
  return {"monte_carlo", tol::welch_fraction, frac, ok,
          fmt("%.0f in-band bins, ", static_cast<double>(total)) +
              fmt("%.0f segments, ", static_cast<double>(e.L.segments)) +
              fmt("%.1f s", t)};
}

CheckResult check_jump_regimes() {
  const RegimeSetup a = jump_regime(JumpRegime::ba0_twice_meas);
  const RegimeSetup b = jump_regime(JumpRegime::ba1_half_meas);
  const JumpRates ground{0.0, 0.0, 0.0, 0.0, 1.0};
  const double T = tol::jump_duration;

  long a_jumps = 0, a_plateaus = 0, b_det = 0, g_det = 0;
  double b_signal = 0.0;
  long b_windows = 0;
  for (int s = 0; s < tol::jump_seeds; ++s) {
    const TraceStats sa = analyse_trace(simulate_jumps(a.rates, T * a.rates.tau_meas, 1000 + s));
    a_jumps += sa.jumps;
    a_plateaus += sa.plateaus;
    const JumpTrace tb = simulate_jumps(b.rates, T * b.rates.tau_meas, 2000 + s);
    const TraceStats sb = analyse_trace(tb);
    b_det += sb.detections;
    b_signal += sb.mean_signal * static_cast<double>(tb.signal.size());
    b_windows += static_cast<long>(tb.signal.size());
    g_det += analyse_trace(simulate_jumps(ground, T, 3000 + s)).detections;
  }
  const double ratio = a_jumps ? static_cast<double>(a_plateaus) / a_jumps : 0.0;
  const double mean_b = b_signal / static_cast<double>(b_windows);
  const double z = (b_det - g_det) / std::sqrt(std::max(1.0, static_cast<double>(b_det + g_det)));
  const bool ok_b = mean_b < tol::jump_mean_signal && z <= tol::jump_z;
  const bool ok_a = ratio >= tol::jump_plateau_ratio;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "tBA0=2tm: %.3f plateaus/jump (%ld jumps) [%s]; tBA1=tm/2: mean %.3f, "
                "detections %ld vs ground %ld (z=%.2f) [%s]",
                ratio, a_jumps, ok_a ? "ok" : "FAIL", mean_b, b_det, g_det, z,
                ok_b ? "ok" : "FAIL");
  return {"jump_regimes", tol::jump_plateau_ratio, ratio, ok_a && ok_b, buf};
}

CheckResult check_closed_identity() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double kR = u(rng), kb = 0.5 * (1.0 + kR);
    SystemParams p = left_device(1.0, kR, kb * (10.0 + 90.0 * u(rng)), 0.3);
    DriveConfig d = left_drive(kb * (2.0 * u(rng) - 1.0));
    d.alpha_R = std::polar(u(rng), 6.0 * u(rng));
    const NoiseModel m(p, d);
    const double w = kb * (6.0 * u(rng) - 3.0);
    worst = std::max(worst, std::abs(m.sff_large_j_closed(w) / m.large_j(w).sff() - 1.0));
  }
  return bounded("sff_closed_identity", worst, tol::closed_identity);
}

CheckResult check_oneport_closed() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (double J : {0.3, 1.0, 3.0, 10.0})
    for (int i = 0; i < 50; ++i) {
      const SystemParams p = left_device(1.0, 0.0, J, 0.3);
      const NoiseModel m(p, left_drive(2.0 * u(rng)));
      const double w = 5.0 * u(rng);
      const double ex = m.sff(w, Variant::exact);
      worst = std::max(worst, std::abs(m.sff_oneport_closed(w) - ex) / ex);
    }
  return bounded("oneport_closed_form", worst, tol::oneport_closed_rel);
}

CheckResult check_large_j_order(EpsMode eps) {
  const double kL = 1.0, kR = 0.4, kb = 0.7;
  std::vector<double> js, errs;
  for (double jr : {10.0, 30.0, 100.0, 300.0}) {
    const SystemParams p = left_device(kL, kR, jr * kb, 0.3);
    DriveConfig d = left_drive(0.3 * kb);
    d.alpha_R = cplx(0.3, 0.2);
    const NoiseModel m(p, d, eps);
    double worst = 0.0;
    for (double w : linspace(-3.0 * kb, 3.0 * kb, 13))
      worst = std::max(worst, rel_diff(m.large_j(w), m.exact(w)));
    js.push_back(p.J);
    errs.push_back(worst);
  }
  const double slope = log_slope(js, errs);
  const std::string name = eps == EpsMode::exact ? "large_j_order_eps_exact"
                                                 : "large_j_order_eps_large_j";
  CheckResult r = bounded(name, std::abs(slope + 1.0), tol::order_one_band,
                          fmt("error ~ J^%.3f", slope));
  return r;
}

CheckResult check_fano_cubic() {
  const double kL = 1.0, kR = 0.4, kb = 0.7;
  std::vector<double> js, diffs;
  for (double jr : {30.0, 100.0, 300.0, 1000.0}) {
    const SystemParams p = left_device(kL, kR, jr * kb, 0.3);
    DriveConfig d = left_drive(0.3 * kb);
    d.alpha_R = cplx(0.3, 0.2);
    const NoiseModel m(p, d);
    const double w = -0.5 * kb;
    js.push_back(p.J);
    diffs.push_back(m.sff(w, Variant::exact) - m.sff_large_j_closed(w));
  }
  const double slope = log_slope(js, diffs);
  return bounded("fano_cubic_order", std::abs(slope + 3.0), tol::cubic_order_band,
                 fmt("exact - closed ~ J^%.3f", slope));
}

CheckResult check_generic_closed_order() {
  const GenericDissipation gd{0.6, 0.3, 0.02, 0.01};
  std::vector<double> js, errs;
  for (double J : {10.0, 100.0, 1000.0}) {
    const GenericNoiseModel m(gd, J, 0.1, left_drive(0.2));
    double worst = 0.0;
    for (double w : linspace(-1.5, 1.5, 7))
      worst = std::max(worst, std::abs(m.sff_closed(w) / m.sff(w) - 1.0));
    js.push_back(J);
    errs.push_back(worst);
  }
  const double slope = log_slope(js, errs);
  return bounded("generic_closed_order", std::abs(slope + 1.0), tol::order_one_band,
                 fmt("error ~ J^%.3f", slope));
}

CheckResult check_delta_cold_argmin() {
  const SystemParams p = left_device(1.0, 0.0, 1.0, 0.3);
  const auto o = minimize_1d(objective_in_delta(Objective::s_minus, p, left_drive(0.0),
                                                Variant::exact),
                             Axis{-2.0, 2.0, false}, 2001);
  const double target = delta_cold(p.omega_m, p.J);
  const double err = o ? std::abs(o->x - target) / p.omega_m : 1.0;
  return bounded("delta_cold_argmin", err, 1e-6, fmt("|delta* - delta_cold|/wm %.2e", err));
}

CheckResult check_output_power() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double kR = u(rng);
    SystemParams p = left_device(1.0, kR, 0.1 + 20.0 * u(rng), 0.3);
    DriveConfig d = left_drive(4.0 * u(rng) - 2.0);
    d.alpha_R = std::polar(u(rng), 6.0 * u(rng));
    const double w = 30.0 * u(rng) - 15.0;
    const auto direct = x_response_direct(w, p, d);
    const auto k = output_transfer(w, p, d).x_kernel;
    const double a = std::norm(direct[0]) + std::norm(direct[1]);
    const double b = std::norm(k[0]) + std::norm(k[1]);
    worst = std::max(worst, std::abs(a / b - 1.0));
  }
  return bounded("kubo_output_power", worst, tol::closed_identity);
}

std::vector<CheckResult> acceptance_suite() {
  return {check_oracle_ring(),   check_oneport_cancellation(), check_min_sff(),
          check_spectrum_shape(),          check_cooling_optimum_j(),          check_linear_noise(),
          check_cooling_expansion(),        check_response_kernel(),           check_monte_carlo(),
          check_jump_regimes()};
}

std::vector<CheckResult> validation_suite(const ValidationHooks& hooks) {
  return {check_oracle_ring(hooks),
          check_oneport_cancellation(),
          check_min_sff(),
          check_linear_noise(),
          check_cooling_expansion(),
          check_response_kernel(),
          check_closed_identity(),
          check_oneport_closed(),
          check_large_j_order(EpsMode::exact),
          check_large_j_order(EpsMode::large_j),
          check_fano_cubic(),
          check_generic_closed_order(),
          check_delta_cold_argmin(),
          check_output_power()};
}

nlohmann::json report_json(const std::vector<CheckResult>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"tolerance", c.tolerance},
                   {"observed", c.observed},
                   {"passed", c.passed},
                   {"detail", c.detail}});
    all = all && c.passed;
  }
  return {{"checks", arr}, {"all_passed", all}};
}

}  // namespace optomech
