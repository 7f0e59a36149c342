#pragma once

#include <span>
#include <string>
#include <vector>

namespace fowt::env {

struct LoadCase {
  double wind_speed = 0.0;   // mean hub wind [m/s]
  double hs = 0.0;           // significant wave height [m]
  double tp = 0.0;           // peak spectral period [s]
  double probability = 0.0;  // renormalized occurrence weight [-]
  unsigned seed = 1;
  double duration = 3600.0;  // [s], excluding transient
  std::string label = "DLC1.2";
};

// Operational table: 7 wind bins x 3 peak periods, weights renormalized to
// sum to one (the published column covers 92.9% of the year).
std::vector<LoadCase> load_case_table();

// 50-year extreme sea state (DLC 6.1).
LoadCase extreme_case();

// JONSWAP spectrum on the given angular frequency grid, numerically scaled
// so that m0 = Hs^2/16 on the grid. gamma <= 0 selects the standard
// peak-enhancement relation in Tp/sqrt(Hs).
std::vector<double> jonswap(std::span<const double> omega, double hs, double tp,
                            double gamma = -1.0);

double jonswap_gamma(double hs, double tp);

// Kaimal point spectrum [m^2/s^2 per rad/s] and the first-order rotor
// averaging admittance applied to it.
double kaimal_spectrum(double omega, double wind_speed, double sigma,
                       double length_scale);
double rotor_admittance(double omega, double wind_speed, double rotor_diameter,
                        double corner_scale);

// IEC normal turbulence model standard deviation, sigma = I_ref (0.75 v + 5.6).
double iec_turbulence_std(double wind_speed, double i_ref);

struct WaveRealization {
  double dt = 0.05;
  std::vector<double> elevation;  // zeta(t) [m]
  // Non-zero synthesis bins (subset of the FFT grid).
  std::vector<double> omega;
  std::vector<double> amplitude;
  std::vector<double> phase;
  double hs = 0.0, tp = 0.0;

  // Target spectrum interpolated onto an arbitrary grid.
  std::vector<double> spectrum_on(std::span<const double> omega_grid) const;
};

struct WindParams {
  double i_ref = 0.12;            // IEC class C
  double length_scale = 340.2;    // Kaimal L [m]
  double averaging_corner = 0.3;  // corner = c * v / D [Hz]
  double harmonic_3p_frac = 0.02; // rotational sampling amplitude / vbar
  double omega_3p = 3.015;        // 3 * rated rotor speed [rad/s]
};

struct WindRealization {
  double dt = 0.05;
  double mean = 0.0;
  std::vector<double> speed;  // v0(t) [m/s]
  std::vector<double> omega;  // synthesis bins of the turbulent part
  std::vector<double> amplitude;
  std::vector<double> phase;
  WindParams params;
  double ti_std = 0.0;

  std::vector<double> spectrum_on(std::span<const double> omega_grid) const;
};

// Deterministic inverse-FFT synthesis keyed by seed. Frequencies span
// [omega_lo, omega_hi] on the FFT bin grid 2 pi / duration.
WaveRealization wave_realization(double hs, double tp, double gamma, unsigned seed,
                                 double duration, double dt, double omega_lo = 0.05,
                                 double omega_hi = 3.0);

WindRealization rotor_effective_wind(double wind_speed, double rotor_diameter,
                                     unsigned seed, double duration, double dt,
                                     const WindParams& params = {});

}  // namespace fowt::env
