#include "optomech/kernels.hpp"

#include <exception>
#include <omp.h>

namespace optomech {

int max_threads() { return omp_get_max_threads(); }

void set_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

std::vector<double> map_range(std::size_t n, const std::function<double(std::size_t)>& f,
                              Exec exec) {
  std::vector<double> out(n);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }

  std::vector<std::exception_ptr> errors(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<double> sff_grid(const NoiseModel& model, const std::vector<double>& omegas,
                             Variant v, Exec exec) {
  return map_range(
      omegas.size(), [&](std::size_t i) { return model.sff(omegas[i], v); }, exec);
}

std::vector<double> sweep(const std::vector<double>& xs,
                          const std::function<double(double)>& objective, Exec exec) {
  return map_range(
      xs.size(), [&](std::size_t i) { return objective(xs[i]); }, exec);
}

}  // namespace optomech
