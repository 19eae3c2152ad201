#include "optomech/measurement.hpp"

#include <cmath>
#include <fftw3.h>
#include <numbers>

namespace optomech {

namespace {

const cplx I(0.0, 1.0);
constexpr double pi = std::numbers::pi;

Mat2 inverse2(const Mat2& A) {
  const cplx det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
  return {{{A[1][1] / det, -A[0][1] / det}, {-A[1][0] / det, A[0][0] / det}}};
}

Mat2 mul(const Mat2& A, const Mat2& B) {
  Mat2 C{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) C[i][j] = A[i][0] * B[0][j] + A[i][1] * B[1][j];
  return C;
}

Mat2 resolvent(double w, const SystemParams& p, const DriveConfig& d) {
  Mat2 K = drift_matrix(p, d);
  for (auto& row : K)
    for (auto& v : row) v = -v;
  K[0][0] -= I * w;
  K[1][1] -= I * w;
  return inverse2(K);
}

// ± basis to port basis
const Mat2 U{{{cplx(std::numbers::sqrt2 / 2), cplx(std::numbers::sqrt2 / 2)},
              {cplx(std::numbers::sqrt2 / 2), cplx(-std::numbers::sqrt2 / 2)}}};

void check_supported_case(const NoiseModel& m) {
  if (std::abs(m.steady().Lambda - 1.0) > 1e-12 || m.drive().delta != 0.0)
    throw ModelError(ErrorKind::regime, "time-domain kernel is only defined for Lambda = 1, delta = 0");
}

class Plan {
 public:
  explicit Plan(std::size_t n)
      : n_(n),
        buf_(reinterpret_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))),
        plan_(fftw_plan_dft_1d(static_cast<int>(n), buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE)) {}
  ~Plan() {
    fftw_destroy_plan(plan_);
    fftw_free(buf_);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  cplx* data() { return reinterpret_cast<cplx*>(buf_); }
  void run() { fftw_execute(plan_); }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  fftw_complex* buf_;
  fftw_plan plan_;
};

}  // namespace

OutputTransfer output_transfer(double w, const SystemParams& p, const DriveConfig& d) {
  const NoiseModel model(p, d);
  const Mat2 Kinv = resolvent(w, p, d);
  const Mat2 T = mul(U, mul(Kinv, input_map(p)));
  const double rk[2] = {std::sqrt(p.kappa_L), std::sqrt(p.kappa_R)};
  OutputTransfer o;
  o.omega = w;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) o.b_matrix[i][j] = (i == j ? 1.0 : 0.0) - rk[i] * T[i][j];
  const NoiseAmplitudes a = model.exact(w);
  o.x_kernel = {-I * a.a_L, -I * a.a_R};
  return o;
}

std::array<cplx, 2> x_response_direct(double w, const SystemParams& p, const DriveConfig& d) {
  const SteadyState ss = solve_steady_state(p, d);
  const Mat2 Kinv = resolvent(w, p, d);
  const Vec2 src{I * p.g * ss.a_minus, I * p.g * ss.a_plus};
  const Vec2 da{Kinv[0][0] * src[0] + Kinv[0][1] * src[1], Kinv[1][0] * src[0] + Kinv[1][1] * src[1]};
  const Vec2 port = to_port_basis(da[0], da[1]);
  return {-std::sqrt(p.kappa_L) * port[0], -std::sqrt(p.kappa_R) * port[1]};
}

double unitarity_defect(const Mat2& B) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const cplx v = B[i][0] * std::conj(B[j][0]) + B[i][1] * std::conj(B[j][1]);
      worst = std::max(worst, std::abs(v - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

KernelSample kernel_large_j(double tau, const SystemParams& p, const DriveConfig& d) {
  if (tau < 0.0) throw ModelError(ErrorKind::bad_argument, "kernel is causal: tau must be >= 0");
  const NoiseModel m(p, d);
  check_supported_case(m);
  const double a = 0.5 * m.derived().kappa_bar;
  const double amp = m.steady().G / (2.0 * p.J) * std::sqrt(0.5 * p.kappa_L);
  return {amp * a * std::exp(-a * tau), -amp};
}

double kernel_resonant_integral(const SystemParams& p, const DriveConfig& d, double span,
                                std::size_t panels) {
  const NoiseModel m(p, d);
  check_supported_case(m);
  const double kb = m.derived().kappa_bar;
  const double a = 0.5 * kb;
  const double amp = m.steady().G / (2.0 * p.J) * std::sqrt(0.5 * p.kappa_L);
  if (panels % 2) ++panels;
  const double h = span / kb / static_cast<double>(panels);
  auto f = [&](std::size_t k) { return amp * a * std::exp(-a * h * static_cast<double>(k)); };
  double acc = f(0) + f(panels);
  for (std::size_t k = 1; k < panels; ++k) acc += (k % 2 ? 4.0 : 2.0) * f(k);
  return acc * h / 3.0;
}

double fit_decay_rate(const std::vector<double>& taus, const std::vector<double>& values) {
  const std::size_t n = taus.size();
  if (n < 2 || values.size() != n)
    throw ModelError(ErrorKind::bad_argument, "decay fit needs matching samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = std::log(values[i]);
    sx += taus[i];
    sy += y;
    sxx += taus[i] * taus[i];
    sxy += taus[i] * y;
  }
  const double dn = static_cast<double>(n);
  return -(dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

TimeSeries resonant_kernel_by_fft(const SystemParams& p, const DriveConfig& d, double T,
                                  std::size_t N) {
  const NoiseModel m(p, d);
  check_supported_case(m);
  const double a = 0.5 * m.derived().kappa_bar;
  const double amp = m.steady().G / (2.0 * p.J) * std::sqrt(0.5 * p.kappa_L);
  Plan plan(N);
  cplx* buf = plan.data();
  const long half = static_cast<long>(N / 2);
  for (long k = -half; k < half; ++k) {
    const std::size_t slot = static_cast<std::size_t>((k + static_cast<long>(N)) % static_cast<long>(N));
    if (k == 0) {
      buf[slot] = 0.0;
      continue;
    }
    const double w = 2.0 * pi * static_cast<double>(k) / T;
    const cplx exact = I * a / (w + I * a);
    const cplx tails = I * a / w + a * a / (w * w) - I * a * a * a / (w * w * w);
    buf[slot] = exact - tails;
  }
  plan.run();

  TimeSeries out;
  for (long j = 1; j < half; ++j) {
    const double t = T * static_cast<double>(j) / static_cast<double>(N);
    const double th = 2.0 * pi * static_cast<double>(j) / static_cast<double>(N);
    const double s1 = a / (2.0 * pi) * (pi - th);
    const double s2 = a * a * T / (2.0 * pi * pi) * (pi * pi / 6.0 - pi * th / 2.0 + th * th / 4.0);
    const double s3 = -a * a * a * T * T / (4.0 * pi * pi * pi) *
                      (pi * pi * th / 6.0 - pi * th * th / 4.0 + th * th * th / 12.0);
    const cplx v = (1.0 + buf[j]) / T + s1 + s2 + s3;
    out.t.push_back(t);
    out.value.push_back(amp * v);
  }
  return out;
}

double anticausal_energy_fraction(const SystemParams& p, const DriveConfig& d, int i, int j,
                                  double T, std::size_t N) {
  const double rk[2] = {std::sqrt(p.kappa_L), std::sqrt(p.kappa_R)};
  const Mat2 UB = mul(U, input_map(p));
  // B − B∞ → c/ω; c/(ω + iλ) has the same tail and a known causal transform
  const cplx c = -I * rk[i] * UB[i][j];
  const double lam = 0.25 * (p.kappa_L + p.kappa_R);

  Plan plan(N);
  cplx* buf = plan.data();
  const long half = static_cast<long>(N / 2);
  for (long k = -half; k < half; ++k) {
    const std::size_t slot = static_cast<std::size_t>((k + static_cast<long>(N)) % static_cast<long>(N));
    const double w = 2.0 * pi * static_cast<double>(k) / T;
    const Mat2 T2 = mul(U, mul(resolvent(w, p, d), input_map(p)));
    const cplx h = -rk[i] * T2[i][j];
    buf[slot] = h - c / (w + I * lam);
  }
  plan.run();

  const double wrap = 1.0 / (1.0 - std::exp(-lam * T));
  double neg = 0.0, total = 0.0;
  for (std::size_t n = 1; n < N; ++n) {
    if (n == N / 2) continue;
    const bool causal = n < N / 2;
    const double t = T * static_cast<double>(n) / static_cast<double>(N) - (causal ? 0.0 : T);
    const double shift = causal ? t : t + T;
    const cplx pole = -I * c * std::exp(-lam * shift) * wrap;
    const cplx f = buf[n] / T + pole;
    const double e = std::norm(f);
    total += e;
    if (!causal) neg += e;
  }
  return neg / total;
}

}  // namespace optomech
