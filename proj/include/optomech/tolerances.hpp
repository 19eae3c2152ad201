#pragma once

#include <cstddef>

namespace optomech::tol {

// acceptance
inline constexpr double oracle_ring_rel = 1e-10;
inline constexpr std::size_t oracle_ring_draws = 1000;
inline constexpr double oracle_ring_seconds = 10.0;

inline constexpr double oneport_null_ratio = 1e-16;
inline constexpr double oneport_seconds = 1.0;

inline constexpr double min_sff_rel = 0.05;
inline constexpr double order_one_band = 0.2;  // fitted exponent within ±0.2

inline constexpr double spectrum_shape_ratio_rel = 0.10;
inline constexpr double spectrum_shape_null_ratio = 1e-12;
inline constexpr double spectrum_shape_peak_rel = 0.05;  // fraction of 2J

inline constexpr double cooling_optimum_j_lo = 0.3;
inline constexpr double cooling_optimum_j_hi = 3.0;
inline constexpr std::size_t cooling_optimum_scan = 4096;

inline constexpr double linear_noise_coeff = 3.0;  // rel. error < 3/(J/κ̄)

inline constexpr double unitarity = 1e-12;
inline constexpr double kernel_cancellation = 1e-12;
inline constexpr double kernel_decay_rel = 1e-3;
inline constexpr double kernel_fft_abs = 1e-8;

inline constexpr double welch_sigma = 3.0;
inline constexpr double welch_fraction = 0.95;
inline constexpr double welch_seconds = 60.0;
inline constexpr double welch_record = 500.0;  // T·κ̄
inline constexpr double welch_dt = 0.01;       // dt·max rate

inline constexpr double jump_mean_signal = 0.5;
inline constexpr double jump_plateau_ratio = 0.1;
inline constexpr int jump_seeds = 100;
inline constexpr double jump_duration = 12.0;  // in τ_meas
inline constexpr double jump_z = 3.0;

// module cross-checks
inline constexpr double closed_identity = 1e-12;
inline constexpr double oneport_closed_rel = 1e-10;
inline constexpr double cubic_order_band = 0.3;
inline constexpr double welch_bias = 0.01;

}  // namespace optomech::tol
