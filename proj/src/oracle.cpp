#include "optomech/oracle.hpp"

#include <cmath>
#include <fftw3.h>
#include <numbers>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

namespace optomech::oracle {

namespace {
const cplx I(0.0, 1.0);
}

LinearSystem linear_system(const SystemParams& p, const DriveConfig& d) {
  validate(p);
  validate_drive(d);
  const double kb = 0.5 * (p.kappa_L + p.kappa_R);
  const double dk = 0.5 * (p.kappa_L - p.kappa_R);
  LinearSystem s;
  s.drift << -(0.5 * kb - I * d.delta), -0.5 * dk,
             -0.5 * dk, -(0.5 * kb + I * (2.0 * p.J - d.delta));
  const double l = std::sqrt(0.5 * p.kappa_L), r = std::sqrt(0.5 * p.kappa_R);
  s.input_map << l, r,
                 l, -r;
  s.drive = s.input_map * Eigen::Vector2cd(d.alpha_L, d.alpha_R);
  return s;
}

Eigen::Vector2cd steady(const LinearSystem& s) {
  return -s.drift.partialPivLu().solve(s.drive);
}

NoiseAmplitudes freq_solve(double omega, const SystemParams& p, const DriveConfig& d) {
  const LinearSystem s = linear_system(p, d);
  const Eigen::Vector2cd a = steady(s);
  const Eigen::Matrix2cd K = -I * omega * Eigen::Matrix2cd::Identity() - s.drift;
  const Eigen::Matrix2cd v = K.partialPivLu().solve(s.input_map);
  // ξ coefficients of g(a₊†a₋ + a₋†a₊) linearized around a
  const Eigen::RowVector2cd coeff =
      p.g * (std::conj(a(0)) * v.row(1) + std::conj(a(1)) * v.row(0));
  const cplx gauge = std::polar(1.0, std::arg(a(0)));
  return {coeff(0) * gauge, coeff(1) * gauge, Variant::exact, omega};
}

double max_rate(const SystemParams& p, const DriveConfig& d) {
  return std::max({0.5 * (p.kappa_L + p.kappa_R), 2.0 * p.J, std::abs(d.delta)});
}

TrajectoryBundle simulate(const SystemParams& p, const DriveConfig& d, const SimOptions& o) {
  const LinearSystem s = linear_system(p, d);
  if (!(o.dt > 0.0) || o.dt >= 0.1 / max_rate(p, d))
    throw ModelError(ErrorKind::timestep, "timestep too large");
  const Eigen::Vector2cd abar = steady(s);

  Eigen::Matrix2cd Phi, Gam;
  if (o.stepper == Stepper::exact) {
    Phi = (s.drift * o.dt).exp();
    Gam = s.drift.partialPivLu().solve(Phi - Eigen::Matrix2cd::Identity());
  } else {
    Phi = Eigen::Matrix2cd::Identity() + o.dt * s.drift;
    Gam = o.dt * Eigen::Matrix2cd::Identity();
  }

  TrajectoryBundle b;
  b.dt = o.dt;
  b.seed = o.seed;
  b.gauge = std::polar(1.0, std::arg(abar(0)));
  b.kappa_bar = 0.5 * (p.kappa_L + p.kappa_R);
  b.a_plus.reserve(o.n_steps + 1);
  b.a_minus.reserve(o.n_steps + 1);
  b.xi_L.reserve(o.n_steps);
  b.xi_R.reserve(o.n_steps);
  b.F.reserve(o.n_steps);

  std::mt19937_64 rng(o.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  // unit two-sided flux: E|ξ_k|² dt = 1
  const double amp = std::sqrt(0.5 / o.dt);
  const double bound = 1e6 * (abar.norm() + 1.0);

  auto force = [&](const Eigen::Vector2cd& a) {
    const Eigen::Vector2cd da = a - abar;
    return 2.0 * p.g * std::real(std::conj(abar(0)) * da(1) + std::conj(abar(1)) * da(0));
  };

  Eigen::Vector2cd a = o.start_at_steady ? abar : Eigen::Vector2cd::Zero();
  b.a_plus.push_back(a(0));
  b.a_minus.push_back(a(1));
  for (std::size_t k = 0; k < o.n_steps; ++k) {
    cplx xl = 0.0, xr = 0.0;
    if (o.noise) {
      const double r1 = normal(rng), r2 = normal(rng), r3 = normal(rng), r4 = normal(rng);
      xl = amp * cplx(r1, r2);
      xr = amp * cplx(r3, r4);
    }
    const Eigen::Vector2cd u = s.drive + s.input_map * Eigen::Vector2cd(xl, xr);
    const Eigen::Vector2cd next = Phi * a + Gam * u;
    if (!std::isfinite(next.norm()) || next.norm() > bound)
      throw ModelError(ErrorKind::timestep, "timestep too large");
    b.xi_L.push_back(xl);
    b.xi_R.push_back(xr);
    b.F.push_back(0.5 * (force(a) + force(next)));
    a = next;
    b.a_plus.push_back(a(0));
    b.a_minus.push_back(a(1));
  }
  return b;
}

WelchResult welch_transfer(const std::vector<cplx>& x, const std::vector<cplx>& y, double dt,
                           std::size_t segment) {
  const std::size_t n = std::min(x.size(), y.size());
  if (segment == 0) segment = 2 * n / 33;
  segment -= segment % 2;
  if (segment < 8) throw ModelError(ErrorKind::bad_argument, "insufficient record length");
  const std::size_t hop = segment / 2;
  const std::size_t count = (n - segment) / hop + 1;
  if (n < segment || count < 32)
    throw ModelError(ErrorKind::bad_argument, "insufficient record length for 32 segments");

  std::vector<double> win(segment);
  for (std::size_t i = 0; i < segment; ++i)
    win[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                   static_cast<double>(segment));

  auto* bx = reinterpret_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * segment));
  auto* by = reinterpret_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * segment));
  const int ns = static_cast<int>(segment);
  fftw_plan px = fftw_plan_dft_1d(ns, bx, bx, FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_plan py = fftw_plan_dft_1d(ns, by, by, FFTW_BACKWARD, FFTW_ESTIMATE);
  cplx* cx = reinterpret_cast<cplx*>(bx);
  cplx* cy = reinterpret_cast<cplx*>(by);

  std::vector<cplx> pyx(segment, 0.0);
  std::vector<double> pxx(segment, 0.0), pyy(segment, 0.0);
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t off = s * hop;
    for (std::size_t i = 0; i < segment; ++i) {
      cx[i] = win[i] * x[off + i];
      cy[i] = win[i] * y[off + i];
    }
    fftw_execute(px);
    fftw_execute(py);
    for (std::size_t m = 0; m < segment; ++m) {
      pyx[m] += cy[m] * std::conj(cx[m]);
      pxx[m] += std::norm(cx[m]);
      pyy[m] += std::norm(cy[m]);
    }
  }
  fftw_destroy_plan(px);
  fftw_destroy_plan(py);
  fftw_free(bx);
  fftw_free(by);

  // Hann at 50% overlap: effective independent segments ≈ K / 1.056
  const double k_eff = static_cast<double>(count) / 1.056;
  WelchResult r;
  r.segments = static_cast<int>(count);
  const double base = 2.0 * std::numbers::pi / (dt * static_cast<double>(segment));
  for (std::size_t j = 0; j < segment; ++j) {
    // ascending frequency order
    const std::size_t m = (j + segment / 2) % segment;
    const long idx = m < segment / 2 ? static_cast<long>(m)
                                     : static_cast<long>(m) - static_cast<long>(segment);
    const cplx H = pyx[m] / pxx[m];
    const double snn = std::max(0.0, pyy[m] - std::norm(pyx[m]) / pxx[m]);
    r.omega.push_back(base * static_cast<double>(idx));
    r.H.push_back(H);
    r.sigma.push_back(std::sqrt(snn / (k_eff * pxx[m])));
  }
  return r;
}

TransferEstimate estimate_transfer(const TrajectoryBundle& b, std::size_t segment) {
  const double T = b.dt * static_cast<double>(b.F.size());
  if (T * b.kappa_bar < 50.0)
    throw ModelError(ErrorKind::bad_argument, "insufficient record length");
  std::vector<cplx> F(b.F.begin(), b.F.end());
  TransferEstimate e{welch_transfer(b.xi_L, F, b.dt, segment),
                     welch_transfer(b.xi_R, F, b.dt, segment)};
  // noise samples carry 1/dt; Σ x dt and Σ y dt share it, so H needs no rescale
  for (auto* w : {&e.L, &e.R})
    for (auto& h : w->H) h *= b.gauge;
  return e;
}

}  // namespace optomech::oracle
