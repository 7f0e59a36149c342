#include "fowt/hydro.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fowt/constants.hpp"
#include "fowt/signal.hpp"

namespace fowt::hydro {

using std::complex;

double wave_number(double omega, double depth) {
  if (omega <= 0.0) throw std::invalid_argument("wave_number: omega must be positive");
  const double w2g = omega * omega / kGravity;
  double k = w2g;  // deep-water start
  for (int i = 0; i < 50; ++i) {
    double th = std::tanh(k * depth);
    double f = k * th - w2g;
    double df = th + k * depth * (1.0 - th * th);
    double step = f / df;
    k -= step;
    if (std::abs(step) < 1e-14 * k) break;
  }
  return k;
}

namespace {

// cosh(k(z+h))/cosh(kh) evaluated stably for large kh.
double decay_cosh(double k, double z, double h) {
  if (k * h > 30.0) return std::exp(k * z);
  return std::cosh(k * (z + h)) / std::cosh(k * h);
}

double decay_sinh_over_cosh(double k, double z, double h) {
  if (k * h > 30.0) return std::exp(k * z);
  return std::sinh(k * (z + h)) / std::cosh(k * h);
}

double decay_cosh_over_sinh(double k, double z, double h) {
  if (k * h > 30.0) return std::exp(k * z);
  return std::cosh(k * (z + h)) / std::sinh(k * h);
}

double decay_sinh_over_sinh(double k, double z, double h) {
  if (k * h > 30.0) return std::exp(k * z);
  return std::sinh(k * (z + h)) / std::sinh(k * h);
}

// integral of cosh(k(z+h))/cosh(kh) dz over [z1, z2]
double integral_decay(double k, double z1, double z2, double h) {
  if (k * h > 30.0) return (std::exp(k * z2) - std::exp(k * z1)) / k;
  return (std::sinh(k * (z2 + h)) - std::sinh(k * (z1 + h))) / (k * std::cosh(k * h));
}

// integral of z * cosh(k(z+h))/cosh(kh) dz over [z1, z2]
double integral_decay_z(double k, double z1, double z2, double h) {
  if (k * h > 30.0) {
    auto prim = [&](double z) { return std::exp(k * z) * (z / k - 1.0 / (k * k)); };
    return prim(z2) - prim(z1);
  }
  auto prim = [&](double z) {
    return (z * std::sinh(k * (z + h)) / k - std::cosh(k * (z + h)) / (k * k)) /
           std::cosh(k * h);
  };
  return prim(z2) - prim(z1);
}

// MacCamy-Fuchs magnitude factor and phase for a cylinder of radius r:
// relative to the long-wave Froude-Krylov + diffraction inertia force.
void maccamy_fuchs(double k, double r, double* magnitude, double* phase) {
  const double x = k * r;
  if (x < 1e-6) {
    *magnitude = 1.0;
    *phase = 0.0;
    return;
  }
  const double j1p = std::cyl_bessel_j(0, x) - std::cyl_bessel_j(1, x) / x;
  const double y1p = std::cyl_neumann(0, x) - std::cyl_neumann(1, x) / x;
  const double denom = std::hypot(j1p, y1p);
  // Long-wave limit of 1/denom is pi x^2 / 2, which is divided out so the
  // factor tends to 1 as kr -> 0.
  *magnitude = (2.0 / (kPi * x * x)) / denom;
  *phase = std::atan2(j1p, y1p);
}

}  // namespace

complex<double> pressure_tf(double omega, double k, double x, double z, double depth) {
  (void)omega;
  return decay_cosh(k, z, depth) * std::polar(1.0, -k * x);
}

complex<double> velocity_x_tf(double omega, double k, double x, double z, double depth) {
  return omega * decay_cosh_over_sinh(k, z, depth) * std::polar(1.0, -k * x);
}

complex<double> velocity_z_tf(double omega, double k, double x, double z, double depth) {
  // w = a omega sinh(k(z+h))/sinh(kh) sin(wt - kx) -> -i relative to elevation
  return complex<double>(0.0, -1.0) * omega * decay_sinh_over_sinh(k, z, depth) *
         std::polar(1.0, -k * x);
}

std::vector<double> HydroConfig::omega_grid() const {
  std::vector<double> g(static_cast<std::size_t>(n_omega));
  for (int i = 0; i < n_omega; ++i)
    g[static_cast<std::size_t>(i)] =
        omega_min + (omega_max - omega_min) * i / (n_omega - 1);
  return g;
}

Eigen::Matrix3d added_mass(const hull::HullShape& shape) {
  const double r = shape.column_radius;
  const double r_hp = shape.plate_radius;
  const double h_hp = shape.params.plate_height;
  const double col_top = 0.0;
  const double col_bot = shape.column_bottom();
  const double keel = shape.keel();

  Eigen::Matrix3d a = Eigen::Matrix3d::Zero();

  const double ma_col = kWaterDensity * kPi * r * r;       // per unit length
  const double ma_band = kWaterDensity * kPi * r_hp * r_hp;

  // Horizontal strips: surge, surge-pitch coupling and pitch from levers.
  auto strip = [&](double per_len, double z1, double z2) {
    const double len = z2 - z1;
    const double zc = 0.5 * (z1 + z2);
    const double i2 = (std::pow(z2, 3) - std::pow(z1, 3)) / 3.0;
    a(0, 0) += 3.0 * per_len * len;
    a(0, 2) += 3.0 * per_len * len * zc;
    a(2, 2) += 3.0 * per_len * i2;
  };
  strip(ma_col, col_bot, col_top);
  strip(ma_band, keel, col_bot);

  // Vertical: flat-disc added mass per plate, minus the column footprint.
  const double ma_plate =
      (8.0 / 3.0) * kWaterDensity * (std::pow(r_hp, 3) - std::pow(r, 3));
  a(1, 1) += 3.0 * ma_plate;
  for (const auto& c : shape.column_positions()) {
    a(2, 2) += ma_plate * c[0] * c[0];
    a(1, 2) += -ma_plate * c[0];  // sums to zero by symmetry
  }
  a(2, 0) = a(0, 2);
  a(2, 1) = a(1, 2);
  return a;
}

namespace {

std::vector<Eigen::Vector3cd> force_rao_impl(const hull::HullShape& shape,
                                             std::span<const double> omega,
                                             double depth, double heading_sign);

}  // namespace

std::vector<Eigen::Vector3cd> force_rao(const hull::HullShape& shape,
                                        std::span<const double> omega, double depth) {
  return force_rao_impl(shape, omega, depth, 1.0);
}

std::vector<Eigen::Vector3cd> force_rao_heading_pi(const hull::HullShape& shape,
                                                   std::span<const double> omega,
                                                   double depth) {
  return force_rao_impl(shape, omega, depth, -1.0);
}

namespace {

std::vector<Eigen::Vector3cd> force_rao_impl(const hull::HullShape& shape,
                                             std::span<const double> omega,
                                             double depth, double heading_sign) {
  const double r = shape.column_radius;
  const double r_hp = shape.plate_radius;
  const double h_hp = shape.params.plate_height;
  const double col_bot = shape.column_bottom();
  const double keel = shape.keel();
  const auto cols = shape.column_positions();

  std::vector<Eigen::Vector3cd> rao(omega.size(), Eigen::Vector3cd::Zero());
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const double w = omega[i];
    if (w <= 0.0) throw std::invalid_argument("force_rao: omega must be positive");
    const double k = wave_number(w, depth);

    // Horizontal inertia force per unit length at unit amplitude, with the
    // MacCamy-Fuchs diffraction factor applied on the respective radius.
    double mag_c, ph_c, mag_p, ph_p;
    maccamy_fuchs(k, r, &mag_c, &ph_c);
    maccamy_fuchs(k, r_hp, &mag_p, &ph_p);

    const double base_col = 2.0 * kWaterDensity * kPi * kGravity * k * r * r;
    const double base_band = 2.0 * kWaterDensity * kPi * kGravity * k * r_hp * r_hp;

    const complex<double> fx_col = complex<double>(0.0, 1.0) * base_col * mag_c *
                                   std::polar(1.0, -ph_c) *
                                   integral_decay(k, col_bot, 0.0, depth);
    const complex<double> fx_band = complex<double>(0.0, 1.0) * base_band * mag_p *
                                    std::polar(1.0, -ph_p) *
                                    integral_decay(k, keel, col_bot, depth);
    const complex<double> mx_col = complex<double>(0.0, 1.0) * base_col * mag_c *
                                   std::polar(1.0, -ph_c) *
                                   integral_decay_z(k, col_bot, 0.0, depth);
    const complex<double> mx_band = complex<double>(0.0, 1.0) * base_band * mag_p *
                                    std::polar(1.0, -ph_p) *
                                    integral_decay_z(k, keel, col_bot, depth);

    // Vertical Froude-Krylov force: keel pressure on the full plate disc
    // minus top pressure on the annulus outside the column.
    const double p_keel = kWaterDensity * kGravity * decay_cosh(k, keel, depth);
    const double p_top = kWaterDensity * kGravity * decay_cosh(k, col_bot, depth);
    const double fz_mag =
        p_keel * kPi * r_hp * r_hp - p_top * kPi * (r_hp * r_hp - r * r);

    Eigen::Vector3cd x = Eigen::Vector3cd::Zero();
    for (const auto& c : cols) {
      const complex<double> phase = std::polar(1.0, -heading_sign * k * c[0]);
      const complex<double> fx = heading_sign * (fx_col + fx_band) * phase;
      const complex<double> fz = fz_mag * phase;
      x(0) += fx;
      x(1) += fz;
      x(2) += heading_sign * (mx_col + mx_band) * phase - c[0] * fz;
    }
    rao[i] = x;
  }
  return rao;
}

}  // namespace

HydroCoefficients make_coefficients(const hull::HullShape& shape,
                                    const HydroConfig& config) {
  HydroCoefficients hc;
  hc.added_mass = added_mass(shape);
  hc.omega = config.omega_grid();
  hc.force_rao = force_rao(shape, hc.omega, config.water_depth);
  hc.water_depth = config.water_depth;
  return hc;
}

Eigen::Vector3cd HydroCoefficients::rao_at(double w) const {
  Eigen::Vector3cd out;
  for (int dof = 0; dof < 3; ++dof) {
    std::vector<complex<double>> col(omega.size());
    for (std::size_t i = 0; i < omega.size(); ++i) col[i] = force_rao[i](dof);
    out(dof) = signal::interp1(omega, std::span<const complex<double>>(col), w);
  }
  return out;
}

HydroCoefficients load_rao_csv(const std::string& path, const Eigen::Matrix3d& a,
                               double depth) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_rao_csv: cannot open " + path);
  HydroCoefficients hc;
  hc.added_mass = a;
  hc.water_depth = depth;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    double v[7];
    char comma;
    for (int i = 0; i < 7; ++i) {
      ss >> v[i];
      if (i < 6) ss >> comma;
    }
    if (!ss && !ss.eof()) throw std::runtime_error("load_rao_csv: malformed row");
    hc.omega.push_back(v[0]);
    hc.force_rao.emplace_back(complex<double>(v[1], v[2]), complex<double>(v[3], v[4]),
                              complex<double>(v[5], v[6]));
  }
  if (hc.omega.empty()) throw std::runtime_error("load_rao_csv: no data rows");
  return hc;
}

KCState make_kc(double velocity, double period, double ref_length) {
  if (velocity < 0.0 || period <= 0.0 || ref_length <= 0.0)
    throw std::invalid_argument("make_kc: invalid arguments");
  return {velocity * period / ref_length, velocity, period};
}

double heave_plate_cd(const KCState& kc, const HydroConfig& config) {
  if (kc.kc < 0.0) throw std::invalid_argument("heave_plate_cd: KC must be >= 0");
  if (kc.kc == 0.0) return config.cd_max;  // quiescent limit
  double cd = config.cd_fit_a * std::pow(kc.kc, -config.cd_fit_b) + config.cd_fit_c;
  return std::clamp(cd, config.cd_min, config.cd_max);
}

std::vector<DragNode> drag_nodes(const hull::HullShape& shape,
                                 const HydroConfig& config) {
  std::vector<DragNode> nodes;
  const int n = std::max(config.column_strips, 10);
  const double col_bot = shape.column_bottom();
  const double dz = (0.0 - col_bot) / n;
  for (const auto& c : shape.column_positions()) {
    for (int i = 0; i < n; ++i) {
      DragNode node;
      node.x = c[0];
      node.z = col_bot + (i + 0.5) * dz;
      node.orientation = DragOrientation::kHorizontal;
      node.area = 2.0 * shape.column_radius * dz;
      node.ref_length = 2.0 * shape.column_radius;
      node.cd = config.cd_column;
      nodes.push_back(node);
    }
    DragNode keel;
    keel.x = c[0];
    keel.z = shape.keel();
    keel.orientation = DragOrientation::kVerticalKeel;
    keel.area = kPi * shape.plate_radius * shape.plate_radius;
    keel.ref_length = 2.0 * shape.plate_radius;
    keel.cd = config.cd_max;  // quiescent start; iterated via KC
    nodes.push_back(keel);
  }
  return nodes;
}

std::vector<double> default_drift_coefficients(const hull::HullShape& shape,
                                               std::span<const double> omega,
                                               double depth) {
  const double breadth = 3.0 * 2.0 * shape.column_radius;
  std::vector<double> tc(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const double k = wave_number(omega[i], depth);
    const double kr = k * shape.column_radius;
    const double refl = kr * kr / (1.0 + kr * kr);  // reflection-shaped rise
    tc[i] = 0.5 * kWaterDensity * kGravity * breadth * refl * refl;
  }
  return tc;
}

std::vector<double> newman_slow_drift_series(std::span<const double> amplitude,
                                             std::span<const double> phase,
                                             std::span<const double> omega,
                                             std::span<const double> drift_coeff,
                                             int n_samples) {
  if (amplitude.size() != phase.size() || amplitude.size() != omega.size() ||
      amplitude.size() != drift_coeff.size())
    throw std::invalid_argument("newman_slow_drift_series: size mismatch");
  std::vector<double> amp(amplitude.size());
  for (std::size_t j = 0; j < amplitude.size(); ++j) {
    if (drift_coeff[j] < 0.0)
      throw std::invalid_argument("newman_slow_drift_series: negative drift coefficient");
    amp[j] = amplitude[j] * std::sqrt(drift_coeff[j]);
  }
  std::vector<double> base = signal::harmonic_synthesis(amp, phase, n_samples);
  for (double& v : base) v = 2.0 * v * v;
  return base;
}

std::vector<double> newman_force_spectrum(std::span<const double> omega,
                                          std::span<const double> s_eta,
                                          std::span<const double> drift_coeff,
                                          std::span<const double> mu) {
  std::vector<double> out(mu.size(), 0.0);
  for (std::size_t m = 0; m < mu.size(); ++m) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < omega.size(); ++i) {
      const double w = omega[i];
      const double wp = w + mu[m];
      if (wp > omega.back()) break;
      const double s2 = signal::interp1(omega, s_eta, wp);
      const double tc = signal::interp1(omega, drift_coeff, w + 0.5 * mu[m]);
      const double dw = omega[i + 1] - omega[i];
      acc += s_eta[i] * s2 * tc * tc * dw;
    }
    out[m] = 8.0 * acc;
  }
  return out;
}

}  // namespace fowt::hydro
