#include "fowt/environment.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "fowt/constants.hpp"
#include "fowt/signal.hpp"

namespace fowt::env {

std::vector<LoadCase> load_case_table() {
  // Wind bin, Hs, three peak periods, raw probability in percent.
  struct Row {
    double v, hs, tp1, tp2, tp3, f;
  };
  static const Row rows[] = {
      {5.0, 1.4, 5.0, 7.0, 11.0, 14.8},  {7.1, 1.7, 5.0, 8.0, 11.0, 25.0},
      {10.3, 2.2, 5.0, 8.0, 11.0, 28.7}, {13.9, 3.0, 7.0, 9.5, 12.0, 17.5},
      {17.9, 4.3, 7.5, 10.0, 13.0, 5.9}, {22.1, 6.2, 10.0, 12.5, 15.0, 0.9},
      {25.0, 8.3, 10.0, 12.0, 14.0, 0.1}};

  double total = 0.0;
  for (const Row& r : rows) total += r.f;

  std::vector<LoadCase> cases;
  unsigned seed = 1;
  for (const Row& r : rows) {
    for (double tp : {r.tp1, r.tp2, r.tp3}) {
      LoadCase c;
      c.wind_speed = r.v;
      c.hs = r.hs;
      c.tp = tp;
      c.probability = (r.f / total) / 3.0;
      c.seed = seed++;
      c.label = "DLC1.2";
      cases.push_back(c);
    }
  }
  return cases;
}

LoadCase extreme_case() {
  LoadCase c;
  c.wind_speed = 44.0;
  c.hs = 10.9;
  c.tp = 15.0;
  c.probability = 0.0;
  c.seed = 101;
  c.label = "DLC6.1";
  return c;
}

double jonswap_gamma(double hs, double tp) {
  const double x = tp / std::sqrt(hs);
  if (x <= 3.6) return 5.0;
  if (x >= 5.0) return 1.0;
  return std::exp(5.75 - 1.15 * x);
}

std::vector<double> jonswap(std::span<const double> omega, double hs, double tp,
                            double gamma) {
  if (hs <= 0.0 || tp <= 0.0) throw std::invalid_argument("jonswap: Hs, Tp > 0 required");
  if (gamma <= 0.0) gamma = jonswap_gamma(hs, tp);
  const double wp = 2.0 * kPi / tp;

  std::vector<double> s(omega.size(), 0.0);
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const double w = omega[i];
    if (w <= 0.0) continue;
    const double sigma = w <= wp ? 0.07 : 0.09;
    const double r = std::exp(-std::pow(w - wp, 2) / (2.0 * sigma * sigma * wp * wp));
    s[i] = std::pow(wp, 4) / std::pow(w, 5) * std::exp(-1.25 * std::pow(wp / w, 4)) *
           std::pow(gamma, r);
  }
  // Scale numerically so the zeroth moment matches Hs^2/16 on this grid.
  double m0 = signal::trapz(omega, s);
  if (m0 <= 0.0) throw std::runtime_error("jonswap: degenerate spectrum on grid");
  const double scale = hs * hs / 16.0 / m0;
  for (double& v : s) v *= scale;
  return s;
}

double kaimal_spectrum(double omega, double wind_speed, double sigma,
                       double length_scale) {
  if (omega <= 0.0) return 0.0;
  const double f = omega / (2.0 * kPi);
  const double x = length_scale / wind_speed;
  const double sf = 4.0 * sigma * sigma * x / std::pow(1.0 + 6.0 * f * x, 5.0 / 3.0);
  return sf / (2.0 * kPi);  // per rad/s
}

double rotor_admittance(double omega, double wind_speed, double rotor_diameter,
                        double corner_scale) {
  const double f = omega / (2.0 * kPi);
  const double fc = corner_scale * wind_speed / rotor_diameter;
  return 1.0 / (1.0 + std::pow(f / fc, 2));  // |H|^2 of a first-order filter
}

double iec_turbulence_std(double wind_speed, double i_ref) {
  return i_ref * (0.75 * wind_speed + 5.6);
}

namespace {

// Uniform phases in [0, 2 pi) drawn directly from the raw engine so the
// stream is identical across standard library implementations.
class PhaseStream {
 public:
  explicit PhaseStream(unsigned seed) : gen_(seed) {}
  double next() {
    return 2.0 * kPi * (static_cast<double>(gen_()) / 4294967296.0);
  }

 private:
  std::mt19937 gen_;
};

}  // namespace

std::vector<double> WaveRealization::spectrum_on(
    std::span<const double> omega_grid) const {
  // Recover the smooth target spectrum from the synthesis amplitudes:
  // a_j = sqrt(2 S dw) with dw the bin spacing.
  std::vector<double> s(omega_grid.size(), 0.0);
  if (omega.size() < 2) return s;
  const double dw = omega[1] - omega[0];
  std::vector<double> s_bins(omega.size());
  for (std::size_t j = 0; j < omega.size(); ++j)
    s_bins[j] = amplitude[j] * amplitude[j] / (2.0 * dw);
  for (std::size_t i = 0; i < omega_grid.size(); ++i) {
    if (omega_grid[i] < omega.front() || omega_grid[i] > omega.back()) continue;
    s[i] = signal::interp1(omega, s_bins, omega_grid[i]);
  }
  return s;
}

std::vector<double> WindRealization::spectrum_on(
    std::span<const double> omega_grid) const {
  std::vector<double> s(omega_grid.size(), 0.0);
  if (omega.size() < 2) return s;
  const double dw = omega[1] - omega[0];
  std::vector<double> s_bins(omega.size());
  for (std::size_t j = 0; j < omega.size(); ++j)
    s_bins[j] = amplitude[j] * amplitude[j] / (2.0 * dw);
  for (std::size_t i = 0; i < omega_grid.size(); ++i) {
    if (omega_grid[i] < omega.front() || omega_grid[i] > omega.back()) continue;
    s[i] = signal::interp1(omega, s_bins, omega_grid[i]);
  }
  return s;
}

WaveRealization wave_realization(double hs, double tp, double gamma, unsigned seed,
                                 double duration, double dt, double omega_lo,
                                 double omega_hi) {
  const int n = static_cast<int>(std::round(duration / dt));
  if (n < 16) throw std::invalid_argument("wave_realization: duration too short");
  const double dw = 2.0 * kPi / (n * dt);
  const int n_bins = n / 2 + 1;
  if (omega_hi >= kPi / dt)
    throw std::invalid_argument("wave_realization: omega_hi beyond Nyquist");

  const int j_lo = std::max(1, static_cast<int>(std::ceil(omega_lo / dw)));
  const int j_hi = std::min(n_bins - 1, static_cast<int>(std::floor(omega_hi / dw)));

  WaveRealization out;
  out.dt = dt;
  out.hs = hs;
  out.tp = tp;
  out.omega.reserve(static_cast<std::size_t>(j_hi - j_lo + 1));
  for (int j = j_lo; j <= j_hi; ++j) out.omega.push_back(j * dw);

  std::vector<double> s = jonswap(out.omega, hs, tp, gamma);
  PhaseStream phases(seed);
  out.amplitude.resize(out.omega.size());
  out.phase.resize(out.omega.size());
  for (std::size_t j = 0; j < out.omega.size(); ++j) {
    out.amplitude[j] = std::sqrt(2.0 * s[j] * dw);
    out.phase[j] = phases.next();
  }

  std::vector<double> amp_bins(static_cast<std::size_t>(n_bins), 0.0);
  std::vector<double> ph_bins(static_cast<std::size_t>(n_bins), 0.0);
  for (int j = j_lo; j <= j_hi; ++j) {
    amp_bins[static_cast<std::size_t>(j)] = out.amplitude[static_cast<std::size_t>(j - j_lo)];
    ph_bins[static_cast<std::size_t>(j)] = out.phase[static_cast<std::size_t>(j - j_lo)];
  }
  out.elevation = signal::harmonic_synthesis(amp_bins, ph_bins, n);
  return out;
}

WindRealization rotor_effective_wind(double wind_speed, double rotor_diameter,
                                     unsigned seed, double duration, double dt,
                                     const WindParams& params) {
  if (wind_speed <= 0.0)
    throw std::invalid_argument("rotor_effective_wind: wind speed must be positive");
  const int n = static_cast<int>(std::round(duration / dt));
  const double dw = 2.0 * kPi / (n * dt);
  const int n_bins = n / 2 + 1;

  WindRealization out;
  out.dt = dt;
  out.mean = wind_speed;
  out.params = params;
  out.ti_std = iec_turbulence_std(wind_speed, params.i_ref);

  const double omega_hi = std::min(3.0, kPi / dt * 0.9);
  const int j_lo = 1;
  const int j_hi = std::min(n_bins - 1, static_cast<int>(std::floor(omega_hi / dw)));

  PhaseStream phases(seed);
  std::vector<double> amp_bins(static_cast<std::size_t>(n_bins), 0.0);
  std::vector<double> ph_bins(static_cast<std::size_t>(n_bins), 0.0);
  out.omega.reserve(static_cast<std::size_t>(j_hi - j_lo + 1));
  out.amplitude.reserve(out.omega.capacity());
  out.phase.reserve(out.omega.capacity());
  for (int j = j_lo; j <= j_hi; ++j) {
    const double w = j * dw;
    const double s = kaimal_spectrum(w, wind_speed, out.ti_std, params.length_scale) *
                     rotor_admittance(w, wind_speed, rotor_diameter,
                                      params.averaging_corner);
    const double a = std::sqrt(2.0 * s * dw);
    const double p = phases.next();
    amp_bins[static_cast<std::size_t>(j)] = a;
    ph_bins[static_cast<std::size_t>(j)] = p;
    out.omega.push_back(w);
    out.amplitude.push_back(a);
    out.phase.push_back(p);
  }
  out.speed = signal::harmonic_synthesis(amp_bins, ph_bins, n);

  // Deterministic rotational-sampling harmonic at the blade passing frequency.
  const double a3p = params.harmonic_3p_frac * wind_speed;
  for (int i = 0; i < n; ++i)
    out.speed[static_cast<std::size_t>(i)] +=
        wind_speed + a3p * std::cos(params.omega_3p * i * dt);
  return out;
}

}  // namespace fowt::env
