#pragma once

#include <functional>
#include <optional>

#include "optomech/kernels.hpp"

namespace optomech {

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;
};

struct Optimum {
  double x = 0.0;
  double y = 0.0;       // second variable, 2-D searches only
  double f = 0.0;
  double scan_x = 0.0;
  double scan_y = 0.0;
  double scan_f = 0.0;
  std::size_t evaluations = 0;
};

// Dense scan then golden-section on the bracketing cell. Non-finite objective
// values count as undefined; ties go to the smallest x.
std::optional<Optimum> minimize_1d(const std::function<double(double)>& f, const Axis& ax,
                                   std::size_t n_scan = 512, double rel_tol = 1e-8,
                                   Exec exec = Exec::parallel);

std::optional<Optimum> minimize_2d(const std::function<double(double, double)>& f,
                                   const Axis& ax, const Axis& ay, std::size_t n_scan = 512,
                                   double rel_tol = 1e-8, Exec exec = Exec::parallel);

std::vector<double> axis_points(const Axis& ax, std::size_t n);

enum class Objective { s_minus, n_eff };

Objective objective_from_string(const std::string& s);

// s_minus is S_FF(−ω_m)/G², the spectrum at fixed enhanced coupling. n_eff is NaN
// where Γ ≤ 0.
double evaluate_objective(Objective obj, const SystemParams& p, const DriveConfig& d, Variant v);

std::function<double(double)> objective_in_delta(Objective obj, const SystemParams& p,
                                                 const DriveConfig& d, Variant v);
// cold = true ties δ to δ_cold(ω_m, J).
std::function<double(double)> objective_in_j(Objective obj, const SystemParams& p,
                                             const DriveConfig& d, Variant v, bool cold);
std::function<double(double, double)> objective_in_delta_j(Objective obj, const SystemParams& p,
                                                           const DriveConfig& d, Variant v);

}  // namespace optomech
