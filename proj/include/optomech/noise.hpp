#pragma once

#include <optional>
#include <string>
#include <vector>

#include "optomech/params.hpp"
#include "optomech/steady_state.hpp"

namespace optomech {

enum class Variant { exact, large_j, one_port, generic };
enum class EpsMode { exact, large_j };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct NoiseAmplitudes {
  cplx a_L;  // driven channel for the generic variant
  cplx a_R;  // internal channel for the generic variant
  Variant variant = Variant::exact;
  double omega = 0.0;

  double sff() const { return std::norm(a_L) + std::norm(a_R); }
};

class GenericNoiseModel {
 public:
  // Drive enters through the driven channel with amplitude d.alpha_L.
  GenericNoiseModel(const GenericDissipation& gd, double J, double g, const DriveConfig& d);

  NoiseAmplitudes amplitudes(double omega) const;
  double sff(double omega) const { return amplitudes(omega).sff(); }
  double sff_closed(double omega) const;

  const GenericDerived& derived() const { return gv_; }
  cplx a_plus() const { return a_plus_; }
  cplx a_minus() const { return a_minus_; }
  double G() const { return G_; }
  cplx eps_m() const { return eps_; }

 private:
  GenericDissipation gd_;
  GenericDerived gv_;
  double J_;
  double delta_;
  cplx a_plus_, a_minus_;
  double G_ = 0.0;
  cplx eps_;
};

// Steady state and derived scalars are computed once per (p, d).
class NoiseModel {
 public:
  NoiseModel(const SystemParams& p, const DriveConfig& d, EpsMode eps = EpsMode::exact);

  NoiseAmplitudes exact(double omega) const;
  NoiseAmplitudes large_j(double omega) const;
  NoiseAmplitudes generic(double omega) const;

  double sff(double omega, Variant v) const;
  double sff_large_j_closed(double omega) const;
  double sff_oneport_closed(double omega) const;

  const SystemParams& params() const { return p_; }
  const DriveConfig& drive() const { return d_; }
  const SteadyState& steady() const { return ss_; }
  const DerivedParams& derived() const { return dp_; }
  cplx eps_used() const { return eps_; }

 private:
  SystemParams p_;
  DriveConfig d_;
  DerivedParams dp_;
  SteadyState ss_;
  cplx eps_;
  std::optional<GenericNoiseModel> gen_;
};

NoiseAmplitudes amplitudes_exact(double omega, const SystemParams& p, const DriveConfig& d);
NoiseAmplitudes amplitudes_large_j(double omega, const SystemParams& p, const DriveConfig& d);
NoiseAmplitudes amplitudes_generic(double omega, const GenericDissipation& gd, double J,
                                   double g, const DriveConfig& d);

double sff(double omega, const SystemParams& p, const DriveConfig& d, Variant v);
double sff_large_j_closed(double omega, const SystemParams& p, const DriveConfig& d);
double sff_oneport_closed(double omega, const SystemParams& p, const DriveConfig& d);
double sff_generic_closed(double omega, const GenericDissipation& gd, double J, double g,
                          const DriveConfig& d);

struct SpectrumSeries {
  std::vector<double> omegas;
  std::vector<double> values;
  SystemParams params;
  DriveConfig drive;
  Variant variant = Variant::exact;
};

std::vector<double> linspace(double lo, double hi, std::size_t n);

SpectrumSeries spectrum_series(const std::vector<double>& grid, const SystemParams& p,
                               const DriveConfig& d, Variant v);

}  // namespace optomech
