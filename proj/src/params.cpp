#include "optomech/params.hpp"

#include <cmath>
#include <limits>

namespace optomech {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v))
    throw ModelError(ErrorKind::non_finite, std::string("non-finite field: ") + name);
}

void require_rate(double v, const char* name) {
  require_finite(v, name);
  if (v < 0.0)
    throw ModelError(ErrorKind::negative_rate, std::string("negative decay rate: ") + name);
}

}  // namespace

const SystemParams& validate(const SystemParams& p) {
  require_finite(p.omega_c, "omega_c");
  require_finite(p.J, "J");
  require_finite(p.g, "g");
  require_finite(p.omega_m, "omega_m");
  require_rate(p.kappa_L, "kappa_L");
  require_rate(p.kappa_R, "kappa_R");
  require_rate(p.gamma, "gamma");
  require_finite(p.n_th, "n_th");
  if (p.J <= 0.0) throw ModelError(ErrorKind::zero_splitting, "zero mode splitting");
  if (p.kappa_L + p.kappa_R <= 0.0)
    throw ModelError(ErrorKind::no_damping, "cavity has no damping");
  if (p.omega_m <= 0.0)
    throw ModelError(ErrorKind::bad_mechanics, "non-positive mechanical frequency");
  if (p.n_th < 0.0)
    throw ModelError(ErrorKind::bad_mechanics, "negative thermal occupancy");
  return p;
}

void validate_drive(const DriveConfig& d) {
  require_finite(d.delta, "delta");
  require_finite(d.alpha_L.real(), "alpha_L_re");
  require_finite(d.alpha_L.imag(), "alpha_L_im");
  require_finite(d.alpha_R.real(), "alpha_R_re");
  require_finite(d.alpha_R.imag(), "alpha_R_im");
  if (std::abs(d.alpha_L) == 0.0 && std::abs(d.alpha_R) == 0.0)
    throw ModelError(ErrorKind::undriven_mode, "no drive applied");
}

void split_j(cplx a, double half_dk, cplx& j_tilde, cplx& delta_j) {
  const double q = half_dk * half_dk;
  j_tilde = std::sqrt(a * a - q);
  // keep the branch continuous with J̃ → a as Δκ → 0
  if (std::real(j_tilde * std::conj(a)) < 0.0) j_tilde = -j_tilde;
  delta_j = q / (a + j_tilde);
}

DerivedParams derive(const SystemParams& p) {
  validate(p);
  DerivedParams d;
  d.kappa_bar = 0.5 * (p.kappa_L + p.kappa_R);
  d.delta_kappa = 0.5 * (p.kappa_L - p.kappa_R);
  split_j(cplx(p.J, 0.0), 0.5 * d.delta_kappa, d.j_tilde, d.delta_j);
  return d;
}

GenericDerived derive_generic(const GenericDissipation& gd, double J) {
  require_rate(gd.kappa_dr_plus, "kappa_dr_plus");
  require_rate(gd.kappa_dr_minus, "kappa_dr_minus");
  require_rate(gd.kappa_int_plus, "kappa_int_plus");
  require_rate(gd.kappa_int_minus, "kappa_int_minus");
  require_finite(J, "J");
  if (J <= 0.0) throw ModelError(ErrorKind::zero_splitting, "zero mode splitting");

  GenericDerived r;
  r.kappa_plus = gd.kappa_dr_plus + gd.kappa_int_plus;
  r.kappa_minus = gd.kappa_dr_minus + gd.kappa_int_minus;
  if (r.kappa_plus <= 0.0 && r.kappa_minus <= 0.0)
    throw ModelError(ErrorKind::no_damping, "cavity has no damping");
  if (gd.kappa_dr_plus <= 0.0)
    throw ModelError(ErrorKind::undriven_channel, "undriven + channel");

  r.kappa_dr = gd.kappa_dr_plus + gd.kappa_dr_minus;
  r.kappa_int = gd.kappa_int_plus + gd.kappa_int_minus;
  r.kappa_bar = 0.5 * (r.kappa_dr + r.kappa_int);
  r.small_dkappa = 0.5 * (r.kappa_plus - r.kappa_minus);
  r.delta_kappa = std::sqrt(gd.kappa_dr_plus * gd.kappa_dr_minus) -
                  std::sqrt(gd.kappa_int_plus * gd.kappa_int_minus);
  r.t_d = std::sqrt(gd.kappa_dr_minus / gd.kappa_dr_plus);
  if (gd.kappa_int_plus > 0.0)
    r.t_i = std::sqrt(gd.kappa_int_minus / gd.kappa_int_plus);
  else
    r.t_i = gd.kappa_int_minus > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;

  split_j(cplx(J, 0.5 * r.small_dkappa), 0.5 * r.delta_kappa, r.j_tilde, r.delta_j);
  return r;
}

GenericDissipation two_port_as_generic(const SystemParams& p) {
  validate(p);
  return {0.5 * p.kappa_L, 0.5 * p.kappa_L, 0.5 * p.kappa_R, 0.5 * p.kappa_R};
}

}  // namespace optomech
