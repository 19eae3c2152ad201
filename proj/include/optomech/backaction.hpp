#pragma once

#include <cstdint>
#include <vector>

#include "optomech/noise.hpp"

namespace optomech {

struct CoolingResult {
  double gamma_opt = 0.0;
  double n_eff = 0.0;
  double s_plus = 0.0;
  double s_minus = 0.0;
};

CoolingResult cooling_from_spectra(double s_plus, double s_minus);
CoolingResult cooling_figures(const SystemParams& p, const DriveConfig& d, Variant v);

double delta_cold(double omega_m, double J);

// Left-port drive at δ_cold; d.delta and d.alpha_R are ignored.
CoolingResult cooling_small_kr(const SystemParams& p, const DriveConfig& d);
double n_eff_small_kr_over_kr(const SystemParams& p);

double tau_meas(const SystemParams& p, const SteadyState& ss);
// +inf when the rate sits at the rounding floor of the spectra.
double tau_ba(int n, const SystemParams& p, const DriveConfig& d, Variant v);
double ba_rate(int n, double s_minus, double s_plus);

// Bracketed factor of the δ = 0 large-J rate and the full rate.
double linear_noise_bracket(const SystemParams& p);
double linear_noise_rate(int n, const SystemParams& p, double G);

struct QndBudget {
  double tau_meas = 0.0;
  std::vector<double> tau_ba;
  double ratio = 0.0;
};

// δ = 0 is imposed.
QndBudget qnd_budget(const SystemParams& p, const DriveConfig& d, int n_max = 3,
                     Variant v = Variant::exact);
double qnd_ratio(const SystemParams& p, const DriveConfig& d);

struct JumpRates {
  double s_minus = 0.0;
  double s_plus = 0.0;
  double gamma = 0.0;
  double n_th = 0.0;
  double tau_meas = 1.0;
};

struct JumpTrace {
  std::vector<double> times;
  std::vector<int> n_true;
  std::vector<double> window_start;
  std::vector<double> signal;
  std::vector<double> jump_times;
  std::vector<int> levels;  // level entered at each jump
  double duration = 0.0;
  double tau_meas = 1.0;
  std::uint64_t seed = 0;
};

JumpTrace simulate_jumps(const JumpRates& r, double duration, std::uint64_t seed,
                         double sample_dt = 0.0);
JumpTrace simulate_jumps(const SystemParams& p, const DriveConfig& d, double duration,
                         std::uint64_t seed, Variant v = Variant::exact);

struct TraceStats {
  int jumps = 0;
  int up_jumps = 0;
  int down_jumps = 0;
  int plateaus = 0;     // post-jump dwell ≥ τ_meas
  int detections = 0;   // adjacent window pairs both ≥ threshold
  double mean_signal = 0.0;
  double time_in_n[2] = {0.0, 0.0};  // occupation time of n = 0 and n ≥ 1
};

TraceStats analyse_trace(const JumpTrace& t, double threshold = 0.5);

enum class JumpRegime { no_backaction, ba0_twice_meas, ba1_half_meas };

struct RegimeSetup {
  SystemParams params;
  DriveConfig drive;
  JumpRates rates;
};

// One-port device tuned so τ_meas = 1 and the regime condition holds.
RegimeSetup jump_regime(JumpRegime r);

}  // namespace optomech
