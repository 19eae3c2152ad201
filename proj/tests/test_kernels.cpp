#include <doctest.h>

#include <stdexcept>

#include "optomech/kernels.hpp"
#include "optomech/noise.hpp"

using namespace optomech;

TEST_CASE("map_range: serial and parallel agree bit for bit") {
  auto f = [](std::size_t i) { return std::sin(0.37 * static_cast<double>(i)) / (1.0 + i); };
  CHECK(map_range(10001, f, Exec::serial) == map_range(10001, f, Exec::parallel));
  CHECK(map_range(0, f, Exec::parallel).empty());
}

TEST_CASE("map_range rethrows the lowest failing index") {
  auto f = [](std::size_t i) -> double {
    if (i == 700 || i == 9000) throw std::runtime_error("bad " + std::to_string(i));
    return 1.0;
  };
  for (Exec e : {Exec::serial, Exec::parallel})
    CHECK_THROWS_WITH(map_range(10000, f, e), "bad 700");
}

TEST_CASE("thread count") {
  const int n = max_threads();
  CHECK(n >= 1);
  set_threads(1);
  CHECK(max_threads() == 1);
  set_threads(n);
  CHECK(max_threads() == n);
}

TEST_CASE("sff_grid matches pointwise evaluation") {
  SystemParams p;
  p.J = 4.0;
  p.kappa_R = 0.3;
  DriveConfig d;
  d.delta = 0.1;
  const NoiseModel m(p, d);
  const std::vector<double> ws = linspace(-12.0, 12.0, 4001);
  const std::vector<double> s = sff_grid(m, ws, Variant::exact, Exec::parallel);
  CHECK(s == sff_grid(m, ws, Variant::exact, Exec::serial));
  for (std::size_t i = 0; i < ws.size(); i += 400) CHECK(s[i] == m.sff(ws[i], Variant::exact));
}

TEST_CASE("sweep") {
  const std::vector<double> xs = linspace(0.0, 1.0, 257);
  auto f = [](double x) { return x * x; };
  const std::vector<double> a = sweep(xs, f, Exec::parallel);
  CHECK(a == sweep(xs, f, Exec::serial));
  CHECK(a.back() == 1.0);
}
