#include <doctest.h>

#include <cmath>
#include <random>

#include "optomech/measurement.hpp"
#include "optomech/tolerances.hpp"
#include "optomech/validation.hpp"

using namespace optomech;

namespace {

SystemParams make(double J, double kL, double kR) {
  SystemParams p;
  p.J = J;
  p.kappa_L = kL;
  p.kappa_R = kR;
  return p;
}

DriveConfig drive(double delta, cplx aR = 0.0) {
  DriveConfig d;
  d.delta = delta;
  d.alpha_R = aR;
  return d;
}

}  // namespace

TEST_CASE("output transfer is unitary") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    const SystemParams p = make(0.1 + 10.0 * u(rng), 0.1 + u(rng), u(rng));
    const DriveConfig d = drive(4.0 * u(rng) - 2.0, std::polar(u(rng), 6.0 * u(rng)));
    for (int i = 0; i < 100; ++i)
      CHECK(unitarity_defect(output_transfer(60.0 * u(rng) - 30.0, p, d).b_matrix) <
            tol::unitarity);
  }
}

TEST_CASE("one-port reflection is all-pass") {
  const SystemParams p = make(1.3, 0.8, 0.0);
  for (double w : linspace(-10.0, 10.0, 101))
    CHECK(std::abs(output_transfer(w, p, drive(0.2)).b_matrix[0][0]) ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("position kernel") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const SystemParams p = make(0.1 + 10.0 * u(rng), 1.0, u(rng));
    const DriveConfig d = drive(4.0 * u(rng) - 2.0, std::polar(u(rng), 6.0 * u(rng)));
    const double w = 20.0 * u(rng) - 10.0;
    const OutputTransfer t = output_transfer(w, p, d);
    const NoiseAmplitudes a = amplitudes_exact(w, p, d);
    const cplx mi(0.0, -1.0);
    CHECK(std::abs(t.x_kernel[0] - mi * a.a_L) <= 1e-12 * std::abs(a.a_L));
    CHECK(std::abs(t.x_kernel[1] - mi * a.a_R) <= 1e-12 * std::max(std::abs(a.a_R), 1e-300));
  }
  const CheckResult c = check_output_power();
  CHECK_MESSAGE(c.passed, c.detail);
}

TEST_CASE("large-J time kernel") {
  const SystemParams p = make(40.0, 1.0, 0.5);
  const DriveConfig d = drive(0.0);
  const double kb = 0.75;
  const KernelSample k0 = kernel_large_j(0.0, p, d);
  const KernelSample k1 = kernel_large_j(2.0, p, d);
  CHECK(k0.impulse_weight < 0.0);
  CHECK(k1.resonant / k0.resonant == doctest::Approx(std::exp(-kb)).epsilon(1e-14));
  CHECK(k0.resonant == doctest::Approx(-k0.impulse_weight * kb / 2));

  const double integral = kernel_resonant_integral(p, d);
  CHECK(std::abs(integral + k0.impulse_weight) < tol::kernel_cancellation * std::abs(k0.impulse_weight));

  std::vector<double> ts, vs;
  for (double t : linspace(0.0, 10.0 / kb, 50)) {
    ts.push_back(t);
    vs.push_back(kernel_large_j(t, p, d).resonant);
  }
  CHECK(fit_decay_rate(ts, vs) == doctest::Approx(kb / 2).epsilon(1e-12));

  CHECK_THROWS_AS(kernel_large_j(-1.0, p, d), ModelError);
  CHECK_THROWS_AS(kernel_large_j(1.0, p, drive(0.2)), ModelError);
  CHECK_THROWS_AS(kernel_large_j(1.0, p, drive(0.0, 0.3)), ModelError);
}

TEST_CASE("kernel from the inverse transform") {
  const SystemParams p = make(40.0, 1.0, 0.5);
  const DriveConfig d = drive(0.0);
  const double kb = 0.75;
  const TimeSeries ts = resonant_kernel_by_fft(p, d, 80.0 / kb, 1 << 15);
  const double peak = kernel_large_j(0.0, p, d).resonant;
  double worst = 0.0;
  for (std::size_t i = 0; i < ts.t.size() && ts.t[i] <= 10.0 / kb; ++i)
    worst = std::max(worst, std::abs(ts.value[i] - kernel_large_j(ts.t[i], p, d).resonant));
  CHECK(worst < tol::kernel_fft_abs * peak);
  const CheckResult c = check_response_kernel();
  CHECK_MESSAGE(c.passed, c.detail);
}

TEST_CASE("output transfer is causal") {
  const SystemParams p = make(2.0, 1.0, 0.4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(anticausal_energy_fraction(p, drive(0.3), i, j, 200.0, 1 << 16) < 1e-9);
}
