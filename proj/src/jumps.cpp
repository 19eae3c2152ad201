#include <cmath>
#include <random>

#include "optomech/backaction.hpp"

namespace optomech {

namespace {

constexpr std::size_t max_events = 20'000'000;

double up_rate(const JumpRates& r, int n) { return (n + 1) * (r.s_minus + r.gamma * r.n_th); }
double down_rate(const JumpRates& r, int n) {
  return n * (r.s_plus + r.gamma * (r.n_th + 1.0));
}

// Time-integral of the piecewise-constant path over [a, b).
double path_integral(const JumpTrace& t, double a, double b) {
  double acc = 0.0;
  int level = 0;
  double from = 0.0;
  for (std::size_t k = 0; k <= t.jump_times.size(); ++k) {
    const double to = k < t.jump_times.size() ? t.jump_times[k] : t.duration;
    const double lo = std::max(a, from), hi = std::min(b, to);
    if (hi > lo) acc += (hi - lo) * level;
    if (to >= b) break;
    if (k < t.levels.size()) level = t.levels[k];
    from = to;
  }
  return acc;
}

}  // namespace

JumpTrace simulate_jumps(const JumpRates& r, double duration, std::uint64_t seed,
                         double sample_dt) {
  if (!(duration > 0.0)) throw ModelError(ErrorKind::bad_argument, "duration must be positive");
  if (!(r.tau_meas > 0.0) || !std::isfinite(r.tau_meas))
    throw ModelError(ErrorKind::bad_argument, "measurement time must be finite and positive");
  if (r.s_minus < 0 || r.s_plus < 0 || r.gamma < 0 || r.n_th < 0)
    throw ModelError(ErrorKind::negative_rate, "negative jump rate");
  if (sample_dt <= 0.0) sample_dt = r.tau_meas / 20.0;

  JumpTrace t;
  t.duration = duration;
  t.tau_meas = r.tau_meas;
  t.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  double now = 0.0;
  int n = 0;
  while (true) {
    const double up = up_rate(r, n), down = down_rate(r, n);
    const double total = up + down;
    if (total <= 0.0) break;
    now += std::exponential_distribution<double>(total)(rng);
    if (now >= duration) break;
    n += unif(rng) * total < up ? 1 : -1;
    t.jump_times.push_back(now);
    t.levels.push_back(n);
    if (t.jump_times.size() > max_events)
      throw ModelError(ErrorKind::regime, "jump process exceeded the event budget");
  }

  const auto n_samples = static_cast<std::size_t>(std::floor(duration / sample_dt)) + 1;
  t.times.reserve(n_samples);
  t.n_true.reserve(n_samples);
  std::size_t k = 0;
  int level = 0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double ts = sample_dt * static_cast<double>(i);
    while (k < t.jump_times.size() && t.jump_times[k] <= ts) level = t.levels[k++];
    t.times.push_back(ts);
    t.n_true.push_back(level);
  }

  const auto n_windows = static_cast<std::size_t>(std::floor(duration / r.tau_meas + 1e-12));
  std::normal_distribution<double> read(0.0, 1.0);
  for (std::size_t w = 0; w < n_windows; ++w) {
    const double a = r.tau_meas * static_cast<double>(w);
    const double b = a + r.tau_meas;
    t.window_start.push_back(a);
    t.signal.push_back(path_integral(t, a, b) / r.tau_meas + read(rng));
  }
  return t;
}

JumpTrace simulate_jumps(const SystemParams& p, const DriveConfig& d, double duration,
                         std::uint64_t seed, Variant v) {
  const NoiseModel model(p, d);
  JumpRates r;
  r.s_minus = model.sff(-p.omega_m, v);
  r.s_plus = model.sff(p.omega_m, v);
  r.gamma = p.gamma;
  r.n_th = p.n_th;
  r.tau_meas = tau_meas(p, model.steady());
  return simulate_jumps(r, duration, seed);
}

TraceStats analyse_trace(const JumpTrace& t, double threshold) {
  TraceStats s;
  s.jumps = static_cast<int>(t.jump_times.size());
  int prev = 0;
  double from = 0.0;
  for (std::size_t k = 0; k < t.jump_times.size(); ++k) {
    (t.levels[k] > prev ? s.up_jumps : s.down_jumps)++;
    s.time_in_n[prev > 0 ? 1 : 0] += t.jump_times[k] - from;
    const double end = k + 1 < t.jump_times.size() ? t.jump_times[k + 1] : t.duration;
    if (end - t.jump_times[k] >= t.tau_meas) s.plateaus++;
    prev = t.levels[k];
    from = t.jump_times[k];
  }
  s.time_in_n[prev > 0 ? 1 : 0] += t.duration - from;
  double acc = 0.0;
  for (std::size_t i = 0; i < t.signal.size(); ++i) {
    acc += t.signal[i];
    if (i + 1 < t.signal.size() && t.signal[i] >= threshold && t.signal[i + 1] >= threshold)
      s.detections++;
  }
  s.mean_signal = t.signal.empty() ? 0.0 : acc / static_cast<double>(t.signal.size());
  return s;
}

RegimeSetup jump_regime(JumpRegime regime) {
  RegimeSetup s;
  s.params.J = 10.0;
  s.params.kappa_L = 1.0;
  s.params.kappa_R = 0.0;
  s.params.omega_m = 0.5;
  s.params.g = 1.0;
  s.drive.alpha_L = 1.0;
  s.drive.delta = regime == JumpRegime::ba1_half_meas ? delta_cold(s.params.omega_m, s.params.J)
                                                      : 0.0;

  auto measure = [&](double& sm, double& sp, double& tm) {
    const NoiseModel m(s.params, s.drive);
    sm = m.sff(-s.params.omega_m, Variant::exact);
    sp = m.sff(s.params.omega_m, Variant::exact);
    tm = tau_meas(s.params, m.steady());
  };

  double sm, sp, tm;
  measure(sm, sp, tm);
  // τ_meas·rate ∝ 1/g², independent of drive strength
  const double target = regime == JumpRegime::ba1_half_meas ? 2.0 : 0.5;
  const double now = regime == JumpRegime::ba1_half_meas ? tm * ba_rate(1, sm, sp)
                                                         : tm * ba_rate(0, sm, sp);
  if (regime != JumpRegime::no_backaction) s.params.g *= std::sqrt(now / target);
  measure(sm, sp, tm);
  // τ_meas ∝ 1/|α|²; rescale to unit measurement time
  s.drive.alpha_L *= std::sqrt(tm);
  measure(sm, sp, tm);

  s.params.n_th = 10.0;
  s.params.gamma = 0.025 / tm;
  s.rates = {sm, sp, s.params.gamma, s.params.n_th, tm};
  if (regime == JumpRegime::no_backaction) s.rates.s_minus = s.rates.s_plus = 0.0;
  return s;
}

}  // namespace optomech
