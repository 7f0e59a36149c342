#include "fowt/signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

#include "fowt/constants.hpp"

namespace fowt::signal {

double trapz(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("trapz: size mismatch");
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i)
    s += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
  return s;
}

namespace {

template <typename T>
T interp_impl(std::span<const double> x, std::span<const T> y, double xq) {
  if (x.empty()) throw std::invalid_argument("interp1: empty grid");
  if (xq <= x.front()) return y.front();
  if (xq >= x.back()) return y.back();
  auto it = std::upper_bound(x.begin(), x.end(), xq);
  std::size_t i = static_cast<std::size_t>(it - x.begin());
  double w = (xq - x[i - 1]) / (x[i] - x[i - 1]);
  return y[i - 1] * (1.0 - w) + y[i] * w;
}

}  // namespace

double interp1(std::span<const double> x, std::span<const double> y, double xq) {
  return interp_impl(x, y, xq);
}

std::complex<double> interp1(std::span<const double> x,
                             std::span<const std::complex<double>> y, double xq) {
  return interp_impl(x, y, xq);
}

double mean(std::span<const double> y) {
  double s = 0.0;
  for (double v : y) s += v;
  return y.empty() ? 0.0 : s / static_cast<double>(y.size());
}

double stdev(std::span<const double> y) {
  if (y.size() < 2) return 0.0;
  double m = mean(y);
  double s = 0.0;
  for (double v : y) s += (v - m) * (v - m);
  return std::sqrt(s / static_cast<double>(y.size()));
}

std::vector<double> harmonic_synthesis(std::span<const double> amplitude,
                                       std::span<const double> phase, int n_samples) {
  if (amplitude.size() != phase.size())
    throw std::invalid_argument("harmonic_synthesis: size mismatch");
  const int n = n_samples;
  const std::size_t n_bins = static_cast<std::size_t>(n / 2) + 1;
  if (amplitude.size() > n_bins)
    throw std::invalid_argument("harmonic_synthesis: more bins than n/2+1");

  std::vector<std::complex<double>> spec(n, {0.0, 0.0});
  for (std::size_t j = 0; j < amplitude.size(); ++j) {
    if (amplitude[j] == 0.0) continue;
    // a cos(w t + phi) = Re[(a e^{i phi}) e^{i w t}]; split between +/- bins.
    std::complex<double> c = 0.5 * amplitude[j] * std::polar(1.0, phase[j]);
    if (j == 0) {
      spec[0] += 2.0 * c;
    } else {
      spec[j] += c;
      spec[static_cast<std::size_t>(n) - j] += std::conj(c);
    }
  }
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> out(n);
  fft.inv(out, spec);  // Eigen's inv divides by n
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i)].real() * n;
  return x;
}

Psd welch_psd(std::span<const double> x, double dt, int segment_length) {
  if (segment_length < 8 || static_cast<std::size_t>(segment_length) > x.size())
    throw std::invalid_argument("welch_psd: bad segment length");
  const int nseg = segment_length;
  const int hop = nseg / 2;
  const int n_freq = nseg / 2 + 1;

  std::vector<double> window(nseg);
  double wss = 0.0;
  for (int i = 0; i < nseg; ++i) {
    window[static_cast<std::size_t>(i)] =
        0.5 * (1.0 - std::cos(2.0 * kPi * i / (nseg - 1)));
    wss += window[static_cast<std::size_t>(i)] * window[static_cast<std::size_t>(i)];
  }

  Eigen::FFT<double> fft;
  std::vector<double> acc(static_cast<std::size_t>(n_freq), 0.0);
  int count = 0;
  std::vector<double> seg(nseg);
  std::vector<std::complex<double>> spec;
  for (std::size_t start = 0; start + static_cast<std::size_t>(nseg) <= x.size();
       start += static_cast<std::size_t>(hop)) {
    double m = 0.0;
    for (int i = 0; i < nseg; ++i) m += x[start + static_cast<std::size_t>(i)];
    m /= nseg;
    for (int i = 0; i < nseg; ++i)
      seg[static_cast<std::size_t>(i)] =
          (x[start + static_cast<std::size_t>(i)] - m) * window[static_cast<std::size_t>(i)];
    fft.fwd(spec, seg);
    for (int k = 0; k < n_freq; ++k) {
      double p = std::norm(spec[static_cast<std::size_t>(k)]);
      if (k != 0 && k != nseg / 2) p *= 2.0;  // one-sided
      acc[static_cast<std::size_t>(k)] += p;
    }
    ++count;
  }
  if (count == 0) throw std::runtime_error("welch_psd: series shorter than a segment");

  // Scale to power per rad/s: divide by (fs * wss) for per-Hz, then by 2 pi.
  const double fs = 1.0 / dt;
  Psd out;
  out.omega.resize(static_cast<std::size_t>(n_freq));
  out.value.resize(static_cast<std::size_t>(n_freq));
  for (int k = 0; k < n_freq; ++k) {
    out.omega[static_cast<std::size_t>(k)] = 2.0 * kPi * fs * k / nseg;
    out.value[static_cast<std::size_t>(k)] =
        acc[static_cast<std::size_t>(k)] / (count * fs * wss) / (2.0 * kPi);
  }
  return out;
}

double gaussian_peak_factor(double n_cycles) {
  if (n_cycles < 2.0) return 1.0;
  const double b = std::sqrt(2.0 * std::log(n_cycles));
  return b + 0.5772156649015329 / b;
}

}  // namespace fowt::signal
