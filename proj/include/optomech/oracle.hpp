#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "optomech/noise.hpp"

namespace optomech::oracle {

struct LinearSystem {
  Eigen::Matrix2cd drift;
  Eigen::Matrix2cd input_map;
  Eigen::Vector2cd drive;
};

LinearSystem linear_system(const SystemParams& p, const DriveConfig& d);

// Steady state and amplitudes by direct matrix inversion.
Eigen::Vector2cd steady(const LinearSystem& s);
NoiseAmplitudes freq_solve(double omega, const SystemParams& p, const DriveConfig& d);

enum class Stepper { euler_maruyama, exact };

struct SimOptions {
  double dt = 1e-3;
  std::size_t n_steps = 1000;
  std::uint64_t seed = 1;
  Stepper stepper = Stepper::exact;
  bool noise = true;
  bool start_at_steady = true;
};

struct TrajectoryBundle {
  double dt = 0.0;
  std::vector<cplx> a_plus, a_minus;  // samples at t_k, k = 0 … n
  std::vector<cplx> xi_L, xi_R;       // held over [t_k, t_k + dt)
  std::vector<double> F;              // linearized force at the step midpoint
  std::uint64_t seed = 0;
  cplx gauge{1.0, 0.0};               // e^{i arg⟨a₊⟩}
  double kappa_bar = 0.0;
};

double max_rate(const SystemParams& p, const DriveConfig& d);
TrajectoryBundle simulate(const SystemParams& p, const DriveConfig& d, const SimOptions& o);

struct WelchResult {
  std::vector<double> omega;  // ascending
  std::vector<cplx> H;
  std::vector<double> sigma;  // standard error of H
  int segments = 0;
};

// Transfer y/x with Hann windows, 50% overlap and at least 32 segments.
// X[ω] = Σ x(t) e^{iωt} dt.
WelchResult welch_transfer(const std::vector<cplx>& x, const std::vector<cplx>& y, double dt,
                           std::size_t segment = 0);

struct TransferEstimate {
  WelchResult L, R;
};

TransferEstimate estimate_transfer(const TrajectoryBundle& b, std::size_t segment = 0);

}  // namespace optomech::oracle
