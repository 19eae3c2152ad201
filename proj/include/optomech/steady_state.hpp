#pragma once

#include <array>

#include "optomech/params.hpp"

namespace optomech {

using Mat2 = std::array<std::array<cplx, 2>, 2>;
using Vec2 = std::array<cplx, 2>;

struct SteadyState {
  cplx a_plus;
  cplx a_minus;
  double G = 0.0;
  cplx eps_m;   // ε_m itself; ε_m*/2J = ⟨a₋⟩/⟨a₊⟩
  cplx Lambda;
};

struct AdiabaticMode {
  double theta = 0.0;
  double omega_plus = 0.0;
  double kappa_plus = 0.0;
};

// (a₊, a₋) drift in the rotating frame, d/dt a = M a + s.
Mat2 drift_matrix(const SystemParams& p, const DriveConfig& d);
Mat2 input_map(const SystemParams& p);
Vec2 drive_vector(const SystemParams& p, const DriveConfig& d);

Vec2 solve2(const Mat2& A, const Vec2& b);

SteadyState solve_steady_state(const SystemParams& p, const DriveConfig& d);

struct CouplingScalars {
  double G;
  cplx eps_m;
  cplx Lambda;
};
CouplingScalars coupling_scalars(const SteadyState& ss, const SystemParams& p,
                                 const DriveConfig& d);

cplx lambda_of(const SystemParams& p, const DriveConfig& d);
cplx eps_m_large_j(const SystemParams& p, const DriveConfig& d);

// Residual of the zero-derivative equations relative to |drive|.
double steady_residual(const SteadyState& ss, const SystemParams& p, const DriveConfig& d);

// ± amplitudes to L/R cavity amplitudes.
Vec2 to_port_basis(cplx a_plus, cplx a_minus);

AdiabaticMode adiabatic_mode(double x, const SystemParams& p);
double quad_coupling(const SystemParams& p);

}  // namespace optomech
