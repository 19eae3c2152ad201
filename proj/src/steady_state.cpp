#include "optomech/steady_state.hpp"

#include <cmath>
#include <numbers>

namespace optomech {

namespace {
const cplx I(0.0, 1.0);
}

Mat2 drift_matrix(const SystemParams& p, const DriveConfig& d) {
  const double kb = 0.5 * (p.kappa_L + p.kappa_R);
  const double dk = 0.5 * (p.kappa_L - p.kappa_R);
  Mat2 M;
  M[0][0] = -(0.5 * kb - I * d.delta);
  M[0][1] = -0.5 * dk;
  M[1][0] = -0.5 * dk;
  M[1][1] = -(0.5 * kb + I * (2.0 * p.J - d.delta));
  return M;
}

Mat2 input_map(const SystemParams& p) {
  const double l = std::sqrt(0.5 * p.kappa_L);
  const double r = std::sqrt(0.5 * p.kappa_R);
  return {{{cplx(l), cplx(r)}, {cplx(l), cplx(-r)}}};
}

Vec2 drive_vector(const SystemParams& p, const DriveConfig& d) {
  const Mat2 B = input_map(p);
  return {B[0][0] * d.alpha_L + B[0][1] * d.alpha_R,
          B[1][0] * d.alpha_L + B[1][1] * d.alpha_R};
}

Vec2 solve2(const Mat2& A, const Vec2& b) {
  const cplx det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
  const double scale = std::abs(A[0][0] * A[1][1]) + std::abs(A[0][1] * A[1][0]);
  if (det == 0.0 || std::abs(det) < 1e-300 * (scale + 1e-300))
    throw ModelError(ErrorKind::degenerate_steady_state, "degenerate steady state");
  return {(A[1][1] * b[0] - A[0][1] * b[1]) / det, (A[0][0] * b[1] - A[1][0] * b[0]) / det};
}

cplx lambda_of(const SystemParams& p, const DriveConfig& d) {
  const cplx l = std::sqrt(p.kappa_L) * d.alpha_L;
  const cplx r = std::sqrt(p.kappa_R) * d.alpha_R;
  if (l + r == 0.0) throw ModelError(ErrorKind::undriven_mode, "undriven symmetric mode");
  return (l - r) / (l + r);
}

CouplingScalars coupling_scalars(const SteadyState& ss, const SystemParams& p,
                                 const DriveConfig& d) {
  if (ss.a_plus == 0.0) throw ModelError(ErrorKind::undriven_mode, "undriven symmetric mode");
  CouplingScalars c;
  c.G = p.g * std::abs(ss.a_plus);
  c.eps_m = std::conj(2.0 * p.J * ss.a_minus / ss.a_plus);
  c.Lambda = lambda_of(p, d);
  return c;
}

SteadyState solve_steady_state(const SystemParams& p, const DriveConfig& d) {
  validate(p);
  validate_drive(d);
  const Mat2 M = drift_matrix(p, d);
  const Vec2 s = drive_vector(p, d);
  const Vec2 a = solve2(M, {-s[0], -s[1]});
  SteadyState ss;
  ss.a_plus = a[0];
  ss.a_minus = a[1];
  const CouplingScalars c = coupling_scalars(ss, p, d);
  ss.G = c.G;
  ss.eps_m = c.eps_m;
  ss.Lambda = c.Lambda;
  return ss;
}

cplx eps_m_large_j(const SystemParams& p, const DriveConfig& d) {
  const double kb = 0.5 * (p.kappa_L + p.kappa_R);
  const double dk = 0.5 * (p.kappa_L - p.kappa_R);
  return std::conj(lambda_of(p, d)) * cplx(-d.delta, 0.5 * kb) - I * (0.5 * dk);
}

double steady_residual(const SteadyState& ss, const SystemParams& p, const DriveConfig& d) {
  const Mat2 M = drift_matrix(p, d);
  const Vec2 s = drive_vector(p, d);
  const cplx r0 = M[0][0] * ss.a_plus + M[0][1] * ss.a_minus + s[0];
  const cplx r1 = M[1][0] * ss.a_plus + M[1][1] * ss.a_minus + s[1];
  const double norm = std::abs(s[0]) + std::abs(s[1]);
  return (std::abs(r0) + std::abs(r1)) / norm;
}

Vec2 to_port_basis(cplx a_plus, cplx a_minus) {
  const double h = std::numbers::sqrt2 / 2.0;
  return {h * (a_plus + a_minus), h * (a_plus - a_minus)};
}

AdiabaticMode adiabatic_mode(double x, const SystemParams& p) {
  validate(p);
  const double gx = p.g * x;
  const double root = std::hypot(p.J, gx);
  AdiabaticMode m;
  // cot 2θ = gx / J
  m.theta = 0.5 * std::atan2(p.J, gx);
  m.omega_plus = p.omega_c - root;
  const double c2 = std::cos(m.theta) * std::cos(m.theta);
  const double s2 = 1.0 - c2;
  m.kappa_plus = c2 * p.kappa_L + s2 * p.kappa_R;
  return m;
}

double quad_coupling(const SystemParams& p) {
  if (p.J <= 0.0) throw ModelError(ErrorKind::zero_splitting, "zero mode splitting");
  return p.g * p.g / (2.0 * p.J);
}

}  // namespace optomech
