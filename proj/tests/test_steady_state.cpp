#include <doctest.h>

#include <cmath>
#include <random>

#include "optomech/steady_state.hpp"
#include "optomech/validation.hpp"

using namespace optomech;

namespace {

SystemParams make(double J, double kL, double kR, double g = 0.1) {
  SystemParams p;
  p.J = J;
  p.kappa_L = kL;
  p.kappa_R = kR;
  p.g = g;
  return p;
}

DriveConfig drive(double delta, cplx aL = 1.0, cplx aR = 0.0) {
  DriveConfig d;
  d.delta = delta;
  d.alpha_L = aL;
  d.alpha_R = aR;
  return d;
}

}  // namespace

TEST_CASE("one-port steady state: port ratio") {
  for (double delta : {-0.7, 0.0, 0.25, 1.9}) {
    const SystemParams p = make(1.3, 1.0, 0.0);
    const SteadyState ss = solve_steady_state(p, drive(delta));
    const Vec2 lr = to_port_basis(ss.a_plus, ss.a_minus);
    CHECK(std::abs(lr[1] / lr[0]) == doctest::Approx(p.J / std::abs(p.J - delta)).epsilon(1e-13));
  }
}

TEST_CASE("symmetric cavity decouples") {
  const SystemParams p = make(4.0, 0.8, 0.8);
  const cplx aL(0.6, -0.3);
  const SteadyState ss = solve_steady_state(p, drive(0.0, aL));
  const double kb = 0.8;
  const cplx s = std::sqrt(0.4) * aL;
  CHECK(std::abs(ss.a_plus - s / (kb / 2)) < 1e-14);
  CHECK(std::abs(ss.a_minus - s / cplx(kb / 2, 2.0 * p.J)) < 1e-14);
}

TEST_CASE("steady-state residual on random draws") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const SystemParams p = make(0.05 + 20.0 * u(rng), 0.1 + u(rng), u(rng));
    const DriveConfig d = drive(10.0 * u(rng) - 5.0, std::polar(u(rng) + 0.1, 6.0 * u(rng)),
                                std::polar(u(rng), 6.0 * u(rng)));
    CHECK(steady_residual(solve_steady_state(p, d), p, d) < 1e-12);
  }
}

TEST_CASE("drive ratio Lambda") {
  const SystemParams p = make(2.0, 0.7, 0.7);
  const SteadyState left = solve_steady_state(p, drive(0.3));
  CHECK(left.Lambda == cplx(1.0, 0.0));
  CHECK(lambda_of(p, drive(0.3, 0.0, cplx(0.2, 0.5))) == cplx(-1.0, 0.0));
  CHECK(std::abs(lambda_of(p, drive(0.0, 0.4, 0.4))) < 1e-15);
  CHECK(left.G >= 0.0);
  CHECK(left.G == doctest::Approx(p.g * std::abs(left.a_plus)));
}

TEST_CASE("eps_m of a resonantly driven one-port cavity") {
  for (double J : {10.0, 100.0, 1000.0}) {
    CHECK(solve_steady_state(make(J, 1.0, 0.0), drive(0.0)).eps_m == cplx(0.0, 0.0));
    // off resonance 2J⟨a₋⟩/⟨a₊⟩ = −2Jδ/(2J − δ)
    const double dl = 0.3;
    const cplx e = solve_steady_state(make(J, 1.0, 0.0), drive(dl)).eps_m;
    CHECK(e.real() == doctest::Approx(-2.0 * J * dl / (2.0 * J - dl)).epsilon(1e-12));
    CHECK(std::abs(e.imag()) < 1e-12);
  }
}

TEST_CASE("large-J eps_m is the leading term") {
  const SystemParams p = make(1000.0, 1.0, 0.4);
  const DriveConfig d = drive(0.3, 1.0, cplx(0.2, 0.1));
  const cplx exact = solve_steady_state(p, d).eps_m;
  const cplx approx = eps_m_large_j(p, d);
  CHECK(std::abs(exact - approx) < 5e-3 * std::abs(approx));
}

TEST_CASE("singular drift is reported") {
  const Mat2 zero{};
  CHECK_THROWS_AS(solve2(zero, Vec2{1.0, 0.0}), ModelError);
}

TEST_CASE("adiabatic mode") {
  SystemParams p = make(2.0, 1.0, 0.2, 0.3);
  p.omega_c = 5.0;
  const AdiabaticMode m0 = adiabatic_mode(0.0, p);
  CHECK(m0.kappa_plus == doctest::Approx(0.6));
  CHECK(m0.omega_plus == doctest::Approx(3.0));
  CHECK(adiabatic_mode(1e9, p).kappa_plus == doctest::Approx(1.0).epsilon(1e-8));

  const double h = 1e-4;
  const double slope =
      (adiabatic_mode(h, p).kappa_plus - adiabatic_mode(-h, p).kappa_plus) / (2 * h);
  CHECK(slope == doctest::Approx(p.g * 0.4 / p.J).epsilon(1e-6));

  const double curv = (adiabatic_mode(h, p).omega_plus - 2.0 * m0.omega_plus +
                       adiabatic_mode(-h, p).omega_plus) / (h * h);
  CHECK(curv == doctest::Approx(-p.g * p.g / p.J).epsilon(1e-5));

  for (double x : {-30.0, -1.0, 0.4, 7.0}) {
    CHECK(adiabatic_mode(x, p).omega_plus == doctest::Approx(adiabatic_mode(-x, p).omega_plus));
    const double k = adiabatic_mode(x, p).kappa_plus;
    CHECK(k >= 0.2 - 1e-15);
    CHECK(k <= 1.0 + 1e-15);
  }
}

TEST_CASE("quadratic coupling") {
  CHECK(quad_coupling(make(2.0, 1.0, 0.0, 0.0)) == 0.0);
  CHECK(quad_coupling(make(2.0, 1.0, 0.0, 0.3)) == doctest::Approx(0.09 / 4.0));
}
