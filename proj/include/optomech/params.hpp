#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace optomech {

using cplx = std::complex<double>;

enum class ErrorKind {
  non_finite,
  negative_rate,
  zero_splitting,
  no_damping,
  bad_mechanics,
  undriven_channel,
  degenerate_steady_state,
  undriven_mode,
  no_net_damping,
  regime,
  bad_argument,
  timestep,
  io,
};

class ModelError : public std::runtime_error {
 public:
  ModelError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// All rates share one user-chosen frequency unit.
struct SystemParams {
  double omega_c = 0.0;  // carrier, bookkeeping only
  double J = 1.0;
  double kappa_L = 1.0;
  double kappa_R = 0.0;
  double g = 0.1;
  double omega_m = 0.1;
  double gamma = 0.0;
  double n_th = 0.0;
};

struct DriveConfig {
  double delta = 0.0;
  cplx alpha_L{1.0, 0.0};
  cplx alpha_R{0.0, 0.0};
};

struct DerivedParams {
  double kappa_bar = 0.0;
  double delta_kappa = 0.0;
  cplx j_tilde;
  cplx delta_j;
};

struct GenericDissipation {
  double kappa_dr_plus = 0.0;
  double kappa_dr_minus = 0.0;
  double kappa_int_plus = 0.0;
  double kappa_int_minus = 0.0;
};

struct GenericDerived {
  double kappa_plus = 0.0;
  double kappa_minus = 0.0;
  double kappa_dr = 0.0;
  double kappa_int = 0.0;
  double kappa_bar = 0.0;
  double small_dkappa = 0.0;  // δκ = (κ₊ − κ₋)/2
  double delta_kappa = 0.0;   // Δκ = sqrt(κdr⁺κdr⁻) − sqrt(κint⁺κint⁻)
  double t_d = 0.0;
  double t_i = 0.0;           // +inf when κint⁺ = 0 < κint⁻
  cplx j_tilde;
  cplx delta_j;
};

const SystemParams& validate(const SystemParams& p);
void validate_drive(const DriveConfig& d);

DerivedParams derive(const SystemParams& p);

// sqrt(a² − b²) with ΔJ = a − J̃ evaluated without cancellation.
void split_j(cplx a, double half_dk, cplx& j_tilde, cplx& delta_j);

GenericDerived derive_generic(const GenericDissipation& gd, double J);
GenericDissipation two_port_as_generic(const SystemParams& p);

}  // namespace optomech
