#pragma once

#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

#include "optomech/noise.hpp"

namespace optomech {

struct CheckResult {
  std::string name;
  double tolerance = 0.0;
  double observed = 0.0;
  bool passed = false;
  std::string detail;
};

using AmplitudeFn =
    std::function<NoiseAmplitudes(double, const SystemParams&, const DriveConfig&)>;

// Lets tests swap the analytic amplitude backend (mutation testing).
struct ValidationHooks {
  AmplitudeFn exact;
};

CheckResult check_oracle_ring(const ValidationHooks& hooks = {});
CheckResult check_oneport_cancellation();
CheckResult check_min_sff();
CheckResult check_spectrum_shape();
CheckResult check_cooling_optimum_j();
CheckResult check_linear_noise();
CheckResult check_cooling_expansion();
CheckResult check_response_kernel();
CheckResult check_monte_carlo(std::uint64_t seed = 7);
CheckResult check_jump_regimes();

// Module-level identities and convergence orders.
CheckResult check_closed_identity();
CheckResult check_oneport_closed();
CheckResult check_large_j_order(EpsMode eps);
CheckResult check_fano_cubic();
CheckResult check_generic_closed_order();
CheckResult check_delta_cold_argmin();
CheckResult check_output_power();

std::vector<CheckResult> acceptance_suite();
std::vector<CheckResult> validation_suite(const ValidationHooks& hooks = {});

nlohmann::json report_json(const std::vector<CheckResult>& checks);

// Least-squares slope of log|y| against log x.
double log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace optomech
