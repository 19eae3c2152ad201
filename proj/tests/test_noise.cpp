#include <doctest.h>

#include <cmath>
#include <random>

#include "optomech/backaction.hpp"
#include "optomech/kernels.hpp"
#include "optomech/oracle.hpp"
#include "optomech/validation.hpp"

using namespace optomech;

namespace {

SystemParams make(double J, double kL, double kR, double wm = 0.3) {
  SystemParams p;
  p.J = J;
  p.kappa_L = kL;
  p.kappa_R = kR;
  p.omega_m = wm;
  return p;
}

DriveConfig drive(double delta, cplx aR = 0.0) {
  DriveConfig d;
  d.delta = delta;
  d.alpha_R = aR;
  return d;
}

double rel(const NoiseAmplitudes& a, const NoiseAmplitudes& b) {
  return std::max(std::abs(a.a_L - b.a_L), std::abs(a.a_R - b.a_R)) /
         std::max(std::abs(b.a_L), std::abs(b.a_R));
}

}  // namespace

TEST_CASE("variant names round trip") {
  for (Variant v : {Variant::exact, Variant::large_j, Variant::one_port, Variant::generic})
    CHECK(variant_from_string(to_string(v)) == v);
  CHECK(to_string(Variant::large_j) == "large-j");
  CHECK_THROWS_AS(variant_from_string("fast"), ModelError);
}

TEST_CASE("exact amplitudes: one port has no R component") {
  const NoiseModel m(make(2.0, 1.0, 0.0), drive(0.4));
  for (double w : {-3.0, 0.0, 0.7, 12.0}) CHECK(m.exact(w).a_R == cplx(0.0, 0.0));
}

TEST_CASE("exact amplitudes match the matrix oracle") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const SystemParams p = make(0.1 + 30.0 * u(rng), 1.0, u(rng));
    const DriveConfig d = drive(6.0 * u(rng) - 3.0, std::polar(u(rng), 6.0 * u(rng)));
    const double w = (2.0 * u(rng) - 1.0) * (2.0 * p.J + 3.0);
    CHECK(rel(amplitudes_exact(w, p, d), oracle::freq_solve(w, p, d)) < 1e-10);
  }
}

TEST_CASE("exact amplitudes fall off as 1/omega far above 2J") {
  const SystemParams p = make(1.0, 1.0, 1.0);
  const NoiseModel m(p, drive(0.0));
  const double r = std::abs(m.exact(1e6).a_L) / std::abs(m.exact(1e7).a_L);
  CHECK(r == doctest::Approx(10.0).epsilon(1e-5));
  CHECK(rel(m.exact(1e6), oracle::freq_solve(1e6, p, drive(0.0))) < 1e-10);
}

TEST_CASE("large-J amplitudes: brackets at resonance and in the background") {
  const SystemParams p = make(50.0, 1.0, 0.6);
  const NoiseModel m(p, drive(0.0));
  const double kb = 0.8;
  const double pre = m.steady().G / (2.0 * p.J) / std::sqrt(2.0);
  const NoiseAmplitudes at0 = m.large_j(0.0);
  CHECK(std::abs(at0.a_L) < 1e-16);
  CHECK(std::abs(at0.a_R) == doctest::Approx(2.0 * pre * std::sqrt(0.6)));
  const NoiseAmplitudes far = m.large_j(1e4 * kb);
  CHECK(std::abs(far.a_L) == doctest::Approx(pre).epsilon(1e-4));
}

TEST_CASE("large-J amplitudes converge to the exact ones as 1/J") {
  std::vector<double> js, errs;
  for (double jr : {10.0, 30.0, 100.0}) {
    const SystemParams p = make(jr * 0.7, 1.0, 0.4);
    const NoiseModel m(p, drive(0.2, cplx(0.1, 0.3)));
    double worst = 0.0;
    for (double w : {-1.3, -0.2, 0.0, 0.5, 1.9}) worst = std::max(worst, rel(m.large_j(w), m.exact(w)));
    js.push_back(p.J);
    errs.push_back(worst);
  }
  CHECK(log_slope(js, errs) == doctest::Approx(-1.0).epsilon(0.1));
}

TEST_CASE("S_FF at the cold detuning vanishes at -omega_m") {
  for (double J : {0.2, 1.0, 10.0}) {
    const SystemParams p = make(J, 1.0, 0.0, 0.3);
    const NoiseModel m(p, drive(delta_cold(p.omega_m, J)));
    double peak = 0.0;
    for (double w : linspace(-3.0 * J - 3.0, 3.0 * J + 3.0, 2001))
      peak = std::max(peak, m.sff(w, Variant::exact));
    CHECK(m.sff(-p.omega_m, Variant::exact) <= 1e-20 * peak);
    CHECK(std::abs(m.sff_oneport_closed(-p.omega_m)) <= 1e-20 * peak);
  }
}

TEST_CASE("minimum S_FF at large J") {
  const SystemParams p = make(100.0, 1.0, 0.3, 0.13);
  const NoiseModel m(p, drive(0.5 * p.omega_m));
  const double G = m.steady().G;
  CHECK(m.sff(-p.omega_m, Variant::exact) ==
        doctest::Approx(G * G * p.kappa_R / (2.0 * p.J * p.J)).epsilon(5e-3));
}

TEST_CASE("large-J closed form") {
  const SystemParams sym = make(100.0, 0.9, 0.9);
  const NoiseModel m(sym, drive(0.0));
  const double G = m.steady().G;
  const double expect = G * G / (4.0 * sym.J * sym.J) * 0.9 * 2.0;
  CHECK(m.sff_large_j_closed(0.0) == doctest::Approx(expect).epsilon(1e-13));
  CHECK(m.sff(0.0, Variant::exact) == doctest::Approx(expect).epsilon(0.02));

  const NoiseModel one(make(20.0, 1.0, 0.0), drive(0.3));
  const NoiseModel tiny(make(20.0, 1.0, 1e-12), drive(0.3));
  CHECK(std::abs(tiny.sff_large_j_closed(0.1) - one.sff_large_j_closed(0.1)) <
        1e-9 * one.sff_large_j_closed(0.1));

  const CheckResult id = check_closed_identity();
  CHECK_MESSAGE(id.passed, id.detail);
}

TEST_CASE("one-port closed form") {
  const CheckResult c = check_oneport_closed();
  CHECK_MESSAGE(c.passed, c.detail);
  const SystemParams p = make(1.7, 1.0, 0.0);
  const double dl = 0.45;
  const NoiseModel m(p, drive(dl));
  const double root = (dl * dl - 2.0 * p.J * dl) / (p.J - dl);
  CHECK(m.sff_oneport_closed(root) < 1e-30);
  CHECK(m.sff(root, Variant::exact) < 1e-30);
  CHECK_THROWS_AS(NoiseModel(make(1.0, 1.0, 0.1), drive(0.0)).sff_oneport_closed(0.0), ModelError);
}

TEST_CASE("generic amplitudes: two-port mapping equals exact") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const SystemParams p = make(0.1 + 10.0 * u(rng), 0.2 + u(rng), u(rng));
    const DriveConfig d = drive(4.0 * u(rng) - 2.0);
    const double w = 8.0 * u(rng) - 4.0;
    const NoiseAmplitudes g = amplitudes_generic(w, two_port_as_generic(p), p.J, p.g, d);
    CHECK(rel(g, amplitudes_exact(w, p, d)) < 1e-10);
  }
}

TEST_CASE("generic amplitudes: lossless channel") {
  const GenericNoiseModel m({0.5, 0.2, 0.0, 0.0}, 3.0, 0.1, drive(0.2));
  for (double w : {-2.0, 0.0, 1.1}) CHECK(m.amplitudes(w).a_R == cplx(0.0, 0.0));
}

TEST_CASE("generic closed form") {
  SUBCASE("no internal loss") {
    const GenericNoiseModel m({0.6, 0.3, 0.0, 0.0}, 40.0, 0.1, drive(0.3));
    const double kp = m.derived().kappa_plus, G = m.G(), J = 40.0;
    for (double w : {-1.0, 0.2, 0.9}) {
      const double expect =
          G * G / (4 * J * J) * 0.3 * std::norm(w + 0.6) / std::norm(cplx(w + 0.3, kp / 2));
      CHECK(m.sff_closed(w) == doctest::Approx(expect).epsilon(1e-13));
    }
  }
  SUBCASE("internal loss on the + mode only is the continuous limit") {
    const GenericNoiseModel a({0.6, 0.3, 0.05, 0.0}, 40.0, 0.1, drive(0.3));
    const GenericNoiseModel b({0.6, 0.3, 0.05, 1e-14}, 40.0, 0.1, drive(0.3));
    CHECK(std::isfinite(a.sff_closed(0.2)));
    CHECK(a.sff_closed(0.2) == doctest::Approx(b.sff_closed(0.2)).epsilon(1e-6));
  }
  SUBCASE("resonant drive leaves the internal floor") {
    const GenericDissipation gd{0.6, 0.3, 0.05, 0.02};
    const GenericNoiseModel m(gd, 40.0, 0.1, drive(0.0));
    const double td = std::sqrt(0.5), G = m.G(), J = 40.0;
    const double floor = G * G / (4 * J * J) * std::pow(std::sqrt(0.02) + td * std::sqrt(0.05), 2);
    CHECK(m.sff_closed(0.0) == doctest::Approx(floor).epsilon(1e-13));
  }
  SUBCASE("two-port mapping reproduces the large-J closed form") {
    for (double J : {10.0, 100.0, 1000.0}) {
      const SystemParams p = make(J, 1.0, 0.3);
      const GenericNoiseModel g(two_port_as_generic(p), J, p.g, drive(0.2));
      const NoiseModel m(p, drive(0.2));
      for (double w : {-0.7, 0.0, 0.4})
        CHECK(g.sff_closed(w) == doctest::Approx(m.sff_large_j_closed(w)).epsilon(1e-13));
    }
  }
  const CheckResult c = check_generic_closed_order();
  CHECK_MESSAGE(c.passed, c.detail);
}

TEST_CASE("generic variant needs a single driven port") {
  const NoiseModel m(make(2.0, 1.0, 0.3), drive(0.0, 0.5));
  CHECK_THROWS_AS(m.generic(0.0), ModelError);
}

TEST_CASE("spectrum series") {
  const SystemParams p = make(10.0, 1.0, 0.25);
  const std::vector<double> coarse = linspace(-5.0, 5.0, 11);
  const std::vector<double> fine = linspace(-5.0, 5.0, 101);
  const SpectrumSeries a = spectrum_series(coarse, p, drive(0.0), Variant::exact);
  const SpectrumSeries b = spectrum_series(fine, p, drive(0.0), Variant::exact);
  for (std::size_t i = 0; i < coarse.size(); ++i) CHECK(a.values[i] == b.values[i * 10]);
  CHECK_THROWS_AS(spectrum_series({}, p, drive(0.0), Variant::exact), ModelError);
  CHECK_THROWS_AS(spectrum_series({1.0, 0.5}, p, drive(0.0), Variant::exact), ModelError);
}

TEST_CASE("resonant dip ordered by kappa_R") {
  double prev = INFINITY;
  for (double kR : {1.0, 0.25, 0.0}) {
    const double kb = 0.5 * (1.0 + kR);
    const NoiseModel m(make(10.0 * kb, 1.0, kR), drive(0.0));
    const double r = m.sff(0.0, Variant::exact) / m.sff(5.0 * kb, Variant::exact);
    CHECK(r < prev);
    prev = r;
  }
  CHECK(prev < 1e-12);
}
