// Serial vs OpenMP timing for the spectrum grid and the J sweep.
//   bench_kernels [grid points] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "optomech/backaction.hpp"
#include "optomech/kernels.hpp"
#include "optomech/optimize.hpp"

using namespace optomech;

namespace {

double best_of(int reps, const std::function<std::vector<double>()>& run,
               std::vector<double>& out) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    out = run();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    best = std::min(best, s);
  }
  return best;
}

void row(const char* name, int reps, const std::function<std::vector<double>(Exec)>& run) {
  std::vector<double> a, b;
  const double ts = best_of(reps, [&] { return run(Exec::serial); }, a);
  const double tp = best_of(reps, [&] { return run(Exec::parallel); }, b);
  std::printf("%-14s n=%-8zu serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name,
              a.size(), ts, tp, ts / tp, a == b ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 400000;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  std::printf("threads: %d\n", max_threads());

  SystemParams p;
  p.J = 10.0;
  p.kappa_L = 1.0;
  p.kappa_R = 0.3;
  DriveConfig d;
  d.delta = 0.2;
  d.alpha_R = cplx(0.2, 0.1);
  const NoiseModel model(p, d);
  const std::vector<double> ws = linspace(-40.0, 40.0, n);
  row("sff_grid", reps, [&](Exec e) { return sff_grid(model, ws, Variant::exact, e); });

  DriveConfig left;
  const auto obj = objective_in_j(Objective::n_eff, p, left, Variant::exact, true);
  const std::vector<double> js = axis_points(Axis{0.01, 100.0, true}, n / 4);
  row("j_sweep", reps, [&](Exec e) { return sweep(js, obj, e); });
  return 0;
}
