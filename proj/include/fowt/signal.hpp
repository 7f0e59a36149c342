#pragma once

#include <complex>
#include <span>
#include <vector>

namespace fowt::signal {

// Trapezoidal integral of y(x) over a monotonically increasing grid.
double trapz(std::span<const double> x, std::span<const double> y);

// Linear interpolation with constant extrapolation at the ends.
double interp1(std::span<const double> x, std::span<const double> y, double xq);
std::complex<double> interp1(std::span<const double> x,
                             std::span<const std::complex<double>> y, double xq);

double mean(std::span<const double> y);
double stdev(std::span<const double> y);

// Real-valued synthesis x[n] = sum_j a_j cos(omega_j n dt + phi_j) for
// omega_j = 2 pi j / (n dt). Uses an inverse FFT, exact for frequencies on
// the bin grid; amplitude/phase arrays are indexed by bin j = 0..n/2.
std::vector<double> harmonic_synthesis(std::span<const double> amplitude,
                                       std::span<const double> phase, int n_samples);

// One-sided Welch PSD estimate (Hann window, 50% overlap) on an angular
// frequency grid [rad/s]; value has units of signal^2 * s/rad.
struct Psd {
  std::vector<double> omega;
  std::vector<double> value;
};
Psd welch_psd(std::span<const double> x, double dt, int segment_length);

// Expected-maximum factor for a zero-mean Gaussian process with n_cycles
// upcrossings (Davenport). Used for max-value estimates from spectra.
double gaussian_peak_factor(double n_cycles);

}  // namespace fowt::signal
