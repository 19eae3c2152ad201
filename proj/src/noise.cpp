#include "optomech/noise.hpp"

#include <cmath>
#include <numbers>

#include "optomech/kernels.hpp"

namespace optomech {

namespace {
const cplx I(0.0, 1.0);
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::exact: return "exact";
    case Variant::large_j: return "large-j";
    case Variant::one_port: return "one-port";
    case Variant::generic: return "generic";
  }
  return "exact";
}

Variant variant_from_string(const std::string& s) {
  if (s == "exact") return Variant::exact;
  if (s == "large-j") return Variant::large_j;
  if (s == "one-port") return Variant::one_port;
  if (s == "generic") return Variant::generic;
  throw ModelError(ErrorKind::bad_argument, "unknown variant: " + s);
}

NoiseModel::NoiseModel(const SystemParams& p, const DriveConfig& d, EpsMode eps)
    : p_(p), d_(d), dp_(derive(p)), ss_(solve_steady_state(p, d)) {
  eps_ = eps == EpsMode::exact ? ss_.eps_m : eps_m_large_j(p, d);
  if (d.alpha_R == 0.0 && p.kappa_L > 0.0) gen_.emplace(two_port_as_generic(p), p.J, p.g, d);
}

NoiseAmplitudes NoiseModel::exact(double w) const {
  const double kb = dp_.kappa_bar;
  const cplx h = I * (0.5 * dp_.delta_kappa);
  const cplx dJ = dp_.delta_j;
  const cplx Jt = dp_.j_tilde;
  const double J = p_.J;
  const cplx pole1 = w + d_.delta - dJ + I * (0.5 * kb);
  const cplx pole2 = pole1 - 2.0 * Jt;
  const cplx pre = I / std::numbers::sqrt2 * ss_.G / (2.0 * Jt);

  auto port = [&](double s, double kappa) {
    const cplx f = 1.0 + s * eps_ / (2.0 * J);
    const cplx t1 = (eps_ + (h - s * dJ) * f) / pole1;
    const cplx t2 = (-s * 2.0 * J + (h + s * dJ) * f) / pole2;
    return pre * std::sqrt(kappa) * (t1 - t2);
  };
  return {port(1.0, p_.kappa_L), port(-1.0, p_.kappa_R), Variant::exact, w};
}

NoiseAmplitudes NoiseModel::large_j(double w) const {
  const double kb = dp_.kappa_bar;
  const double dl = d_.delta;
  const cplx res = cplx(-dl, 0.5 * kb) / cplx(w + dl, 0.5 * kb) * std::conj(ss_.Lambda);
  const cplx pre = I / std::numbers::sqrt2 * ss_.G / (2.0 * p_.J);
  return {pre * std::sqrt(p_.kappa_L) * (res - 1.0), pre * std::sqrt(p_.kappa_R) * (res + 1.0),
          Variant::large_j, w};
}

NoiseAmplitudes NoiseModel::generic(double w) const {
  if (!gen_)
    throw ModelError(ErrorKind::bad_argument, "generic variant needs a single driven port");
  return gen_->amplitudes(w);
}

double NoiseModel::sff(double w, Variant v) const {
  switch (v) {
    case Variant::exact: return exact(w).sff();
    case Variant::large_j: return large_j(w).sff();
    case Variant::one_port: return sff_oneport_closed(w);
    case Variant::generic: return generic(w).sff();
  }
  return exact(w).sff();
}

double NoiseModel::sff_large_j_closed(double w) const {
  const double kb = dp_.kappa_bar;
  const double dk = dp_.delta_kappa;
  const double dl = d_.delta;
  const double G = ss_.G;
  const cplx num = (dk / kb) * (w + 2.0 * dl) + cplx(dl, 0.5 * kb) * (ss_.Lambda - dk / kb);
  const double den = std::norm(cplx(w + dl, 0.5 * kb));
  return G * G / (4.0 * p_.J * p_.J) * kb *
         (p_.kappa_L * p_.kappa_R / (kb * kb) + std::norm(num) / den);
}

double NoiseModel::sff_oneport_closed(double w) const {
  if (p_.kappa_R != 0.0)
    throw ModelError(ErrorKind::regime, "one-port closed form requires kappa_R = 0");
  const double J = p_.J, dl = d_.delta, kL = p_.kappa_L, G = ss_.G;
  const double wd = w + dl;
  const double num = J * (w + 2.0 * dl) - dl * wd;
  const cplx den = 2.0 * J * cplx(wd, 0.25 * kL) - wd * cplx(wd, 0.5 * kL);
  return 2.0 * G * G * kL / ((2.0 * J - dl) * (2.0 * J - dl)) * (num * num) / std::norm(den);
}

GenericNoiseModel::GenericNoiseModel(const GenericDissipation& gd, double J, double g,
                                     const DriveConfig& d)
    : gd_(gd), gv_(derive_generic(gd, J)), J_(J), delta_(d.delta) {
  validate_drive(d);
  if (d.alpha_L == 0.0)
    throw ModelError(ErrorKind::undriven_mode, "undriven symmetric mode");
  Mat2 M;
  M[0][0] = -(0.5 * gv_.kappa_plus - I * delta_);
  M[0][1] = -0.5 * gv_.delta_kappa;
  M[1][0] = -0.5 * gv_.delta_kappa;
  M[1][1] = -(0.5 * gv_.kappa_minus + I * (2.0 * J - delta_));
  const Vec2 s{std::sqrt(gd.kappa_dr_plus) * d.alpha_L, std::sqrt(gd.kappa_dr_minus) * d.alpha_L};
  const Vec2 a = solve2(M, {-s[0], -s[1]});
  a_plus_ = a[0];
  a_minus_ = a[1];
  if (a_plus_ == 0.0) throw ModelError(ErrorKind::undriven_mode, "undriven symmetric mode");
  G_ = g * std::abs(a_plus_);

  const double td = gv_.t_d;
  const cplx r = (td * cplx(delta_, 0.5 * gv_.kappa_plus) - I * (0.5 * gv_.delta_kappa)) /
                 (cplx(-2.0 * J + delta_, 0.5 * gv_.kappa_minus) - I * (0.5 * gv_.delta_kappa * td));
  eps_ = std::conj(r) * (2.0 * J);
}

NoiseAmplitudes GenericNoiseModel::amplitudes(double w) const {
  const double J = J_;
  const cplx e = eps_ / (2.0 * J);
  const cplx q = 1.0 + I * gv_.small_dkappa / (2.0 * J);
  const cplx h = I * (0.5 * gv_.delta_kappa);
  const cplx dJ = gv_.delta_j;
  const cplx pole1 = w + delta_ - dJ + I * (0.5 * gv_.kappa_plus);
  const cplx pole2 = pole1 - 2.0 * gv_.j_tilde;
  const cplx pre = I * G_ / (2.0 * gv_.j_tilde);

  // √κ⁺·t is carried as √κ⁻
  auto channel = [&](double s, double kp, double km) {
    const double rp = std::sqrt(kp), rm = std::sqrt(km);
    const cplx n1 = rp * (eps_ * q + h - dJ * e) + rm * (s * h * e - s * dJ);
    const cplx n2 = rp * (h + dJ * e) + rm * (-s * 2.0 * J * q + s * h * e + s * dJ);
    return pre * (n1 / pole1 - n2 / pole2);
  };
  return {channel(1.0, gd_.kappa_dr_plus, gd_.kappa_dr_minus),
          channel(-1.0, gd_.kappa_int_plus, gd_.kappa_int_minus), Variant::generic, w};
}

double GenericNoiseModel::sff_closed(double w) const {
  const double kp = gv_.kappa_plus;
  const cplx res = cplx(w + delta_, 0.5 * kp);
  const cplx internal = std::sqrt(gd_.kappa_int_minus) * res +
                        gv_.t_d * std::sqrt(gd_.kappa_int_plus) * cplx(-delta_, 0.5 * kp);
  const double wd = w + 2.0 * delta_;
  return G_ * G_ / (4.0 * J_ * J_) / std::norm(res) *
         (gd_.kappa_dr_minus * wd * wd + std::norm(internal));
}

NoiseAmplitudes amplitudes_exact(double w, const SystemParams& p, const DriveConfig& d) {
  return NoiseModel(p, d).exact(w);
}

NoiseAmplitudes amplitudes_large_j(double w, const SystemParams& p, const DriveConfig& d) {
  return NoiseModel(p, d).large_j(w);
}

NoiseAmplitudes amplitudes_generic(double w, const GenericDissipation& gd, double J, double g,
                                   const DriveConfig& d) {
  return GenericNoiseModel(gd, J, g, d).amplitudes(w);
}

double sff(double w, const SystemParams& p, const DriveConfig& d, Variant v) {
  return NoiseModel(p, d).sff(w, v);
}

double sff_large_j_closed(double w, const SystemParams& p, const DriveConfig& d) {
  return NoiseModel(p, d).sff_large_j_closed(w);
}

double sff_oneport_closed(double w, const SystemParams& p, const DriveConfig& d) {
  return NoiseModel(p, d).sff_oneport_closed(w);
}

double sff_generic_closed(double w, const GenericDissipation& gd, double J, double g,
                          const DriveConfig& d) {
  return GenericNoiseModel(gd, J, g, d).sff_closed(w);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
  out[n - 1] = hi;
  return out;
}

SpectrumSeries spectrum_series(const std::vector<double>& grid, const SystemParams& p,
                               const DriveConfig& d, Variant v) {
  if (grid.empty()) throw ModelError(ErrorKind::bad_argument, "empty frequency grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw ModelError(ErrorKind::bad_argument, "frequency grid must be increasing");
  const NoiseModel model(p, d);
  SpectrumSeries s;
  s.omegas = grid;
  s.values = sff_grid(model, grid, v, Exec::parallel);
  s.params = p;
  s.drive = d;
  s.variant = v;
  return s;
}

}  // namespace optomech
