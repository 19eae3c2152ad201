#pragma once

#include <array>
#include <vector>

#include "optomech/noise.hpp"

namespace optomech {

struct OutputTransfer {
  Mat2 b_matrix;                // (L, R) inputs to (L, R) outputs
  std::array<cplx, 2> x_kernel; // position to (L, R) outputs
  double omega = 0.0;
};

OutputTransfer output_transfer(double omega, const SystemParams& p, const DriveConfig& d);

// Position response of the outputs from the g-linear terms of the equations of motion.
std::array<cplx, 2> x_response_direct(double omega, const SystemParams& p, const DriveConfig& d);

// Largest |(B B†)_ij − δ_ij|.
double unitarity_defect(const Mat2& B);

struct KernelSample {
  double resonant = 0.0;        // smooth part at τ
  double impulse_weight = 0.0;  // weight of the impulse at τ = 0⁺
};

KernelSample kernel_large_j(double tau, const SystemParams& p, const DriveConfig& d);

// ∫₀^∞ of the smooth part by composite Simpson on [0, span/κ̄].
double kernel_resonant_integral(const SystemParams& p, const DriveConfig& d,
                                double span = 80.0, std::size_t panels = 1 << 16);

// Least-squares slope of −log(value) against τ.
double fit_decay_rate(const std::vector<double>& taus, const std::vector<double>& values);

// Resonant pole of the large-J amplitude (Λ = 1, δ = 0) taken back to the time domain
// by a discrete Fourier sum with period T and N points. The 1/ω, 1/ω², 1/ω³ tails
// are summed analytically. Returns values at τ_j = jT/N for j = 1 … N/2 − 1.
struct TimeSeries {
  std::vector<double> t;
  std::vector<cplx> value;
};
TimeSeries resonant_kernel_by_fft(const SystemParams& p, const DriveConfig& d, double T,
                                  std::size_t N);

// Inverse transform of B_ij[ω] − B_ij[∞] on τ ∈ [−T/2, T/2) and the fraction of its
// energy on τ < 0.
double anticausal_energy_fraction(const SystemParams& p, const DriveConfig& d, int i, int j,
                                  double T, std::size_t N);

}  // namespace optomech
