// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>

#include "optomech/validation.hpp"

using namespace optomech;

int main() {
  using Check = CheckResult (*)();
  struct Row {
    int id;
    Check run;
  };
  const Row rows[] = {
      {1, [] { return check_oracle_ring(); }},
      {2, check_oneport_cancellation},
      {3, check_min_sff},
      {4, check_spectrum_shape},
      {5, check_cooling_optimum_j},
      {6, check_linear_noise},
      {7, check_cooling_expansion},
      {8, check_response_kernel},
      {9, [] { return check_monte_carlo(); }},
      {10, check_jump_regimes},
  };

  int failed = 0;
  for (const Row& r : rows) {
    const auto t0 = std::chrono::steady_clock::now();
    const CheckResult c = r.run();
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2d %-22s observed=%-12.5g tol=%-10.3g %6.2fs  %s\n",
                c.passed ? "PASS" : "FAIL", r.id, c.name.c_str(), c.observed, c.tolerance, s,
                c.detail.c_str());
    std::fflush(stdout);
    failed += !c.passed;
  }
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed ? 1 : 0;
}
