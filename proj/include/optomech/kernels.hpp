#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "optomech/noise.hpp"

namespace optomech {

enum class Exec { serial, parallel };

int max_threads();
void set_threads(int n);

// out[i] = f(i). Exceptions thrown by f are rethrown after the loop,
// lowest index first. Output order never depends on scheduling.
std::vector<double> map_range(std::size_t n, const std::function<double(std::size_t)>& f,
                              Exec exec);

std::vector<double> sff_grid(const NoiseModel& model, const std::vector<double>& omegas,
                             Variant v, Exec exec);

// Each grid point builds its own model; used for J or δ sweeps.
std::vector<double> sweep(const std::vector<double>& xs,
                          const std::function<double(double)>& objective, Exec exec);

}  // namespace optomech
