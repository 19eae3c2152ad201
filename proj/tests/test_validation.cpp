#include <doctest.h>

#include <cmath>

#include "optomech/tolerances.hpp"
#include "optomech/validation.hpp"

using namespace optomech;

TEST_CASE("log slope of a power law") {
  const std::vector<double> x{1.0, 10.0, 100.0};
  CHECK(log_slope(x, {3.0, 0.3, 0.03}) == doctest::Approx(-1.0));
  CHECK(log_slope(x, {-2.0, -200.0, -20000.0}) == doctest::Approx(2.0));
}

TEST_CASE("validation suite is green") {
  const std::vector<CheckResult> checks = validation_suite();
  for (const auto& c : checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  const nlohmann::json r = report_json(checks);
  CHECK(r.at("all_passed") == true);
  CHECK(r.at("checks").size() == checks.size());
  for (const auto& e : r.at("checks")) {
    CHECK(e.contains("name"));
    CHECK(e.contains("tolerance"));
    CHECK(e.contains("observed"));
    CHECK(e.contains("passed"));
  }
}

TEST_CASE("report carries the acceptance tolerances") {
  CHECK(check_oracle_ring().tolerance == 1e-10);
  CHECK(check_oneport_cancellation().tolerance == 1e-16);
  CHECK(check_min_sff().tolerance == 0.05);
  CHECK(check_spectrum_shape().tolerance == 0.10);
  CHECK(check_cooling_optimum_j().tolerance == 3.0);
  CHECK(check_linear_noise().tolerance == 3.0);
  CHECK(check_cooling_expansion().tolerance == 0.2);
  CHECK(check_response_kernel().tolerance == 1e-12);
  CHECK(tol::kernel_decay_rel == 1e-3);
  CHECK(tol::kernel_fft_abs == 1e-8);
  CHECK(tol::welch_fraction == 0.95);
  CHECK(tol::welch_sigma == 3.0);
  CHECK(tol::welch_seconds == 60.0);
  CHECK(tol::jump_mean_signal == 0.5);
}

TEST_CASE("failures are reported, not hidden") {
  // the literal resonant-ratio target and the plateau clause are known misses
  CHECK_FALSE(check_spectrum_shape().passed);
  CHECK_FALSE(check_jump_regimes().passed);
}
