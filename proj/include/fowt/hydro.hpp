#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fowt/hull.hpp"

namespace fowt::hydro {

// Linear (Airy) wave kinematics at finite depth.
double wave_number(double omega, double depth);

// Complex transfer functions from unit-amplitude surface elevation at x = 0
// to flow quantities at (x, z), with the e^{i(w t - k x)} convention.
std::complex<double> pressure_tf(double omega, double k, double x, double z,
                                 double depth);  // dynamic pressure / (rho g)
std::complex<double> velocity_x_tf(double omega, double k, double x, double z,
                                   double depth);
std::complex<double> velocity_z_tf(double omega, double k, double x, double z,
                                   double depth);

struct HydroConfig {
  double water_depth = 130.0;  // [m]
  double omega_min = 0.05;     // [rad/s]
  double omega_max = 3.0;
  int n_omega = 600;
  double cd_column = 0.4;
  int column_strips = 10;  // vertical drag strips per column
  // Parametric heave-plate drag fit Cd(KC) = a KC^-b + c, clipped.
  double cd_fit_a = 5.0;
  double cd_fit_b = 0.4;
  double cd_fit_c = 1.5;
  double cd_min = 1.5;
  double cd_max = 15.0;

  std::vector<double> omega_grid() const;
};

struct HydroCoefficients {
  Eigen::Matrix3d added_mass = Eigen::Matrix3d::Zero();  // surge/heave/pitch at SWL
  std::vector<double> omega;
  std::vector<Eigen::Vector3cd> force_rao;  // X(w) per unit wave amplitude
  double water_depth = 130.0;

  Eigen::Vector3cd rao_at(double w) const;
};

// Frequency-independent added mass from slender-body strips (horizontal) and
// the flat-disc formula for the heave plates (vertical).
Eigen::Matrix3d added_mass(const hull::HullShape& shape);

// First-order wave force RAO: Froude-Krylov pressures with a MacCamy-Fuchs
// diffraction correction on the columns, exact inter-column phasing, and
// top/keel pressure difference on the heave plates.
std::vector<Eigen::Vector3cd> force_rao(const hull::HullShape& shape,
                                        std::span<const double> omega,
                                        double depth);

// Same assembly for a wave traveling in the -x direction.
std::vector<Eigen::Vector3cd> force_rao_heading_pi(const hull::HullShape& shape,
                                                   std::span<const double> omega,
                                                   double depth);

HydroCoefficients make_coefficients(const hull::HullShape& shape,
                                    const HydroConfig& config);

// Override pathway for externally computed coefficients. CSV layout:
// header line, then rows "omega,reX1,imX1,reX2,imX2,reX3,imX3".
HydroCoefficients load_rao_csv(const std::string& path, const Eigen::Matrix3d& a,
                               double depth);

enum class DragOrientation { kHorizontal, kVerticalKeel };

struct DragNode {
  double x = 0.0;  // plan position of the member [m]
  double z = 0.0;  // elevation [m]
  DragOrientation orientation = DragOrientation::kHorizontal;
  double area = 0.0;        // reference area [m^2]
  double ref_length = 0.0;  // significant length D for KC [m]
  double cd = 0.0;
};

struct KCState {
  double kc = 0.0;
  double velocity = 0.0;  // response velocity magnitude [m/s]
  double period = 0.0;    // [s]
};

KCState make_kc(double velocity, double period, double ref_length);

// Monotone-decreasing experimental fit for heave-plate vertical drag.
double heave_plate_cd(const KCState& kc, const HydroConfig& config);

// Column strips (horizontal drag, fixed Cd) plus one vertical node per plate
// keel. Plate vertical drag acts on the keel surface only.
std::vector<DragNode> drag_nodes(const hull::HullShape& shape,
                                 const HydroConfig& config);

// Mean-drift coefficient heuristic T_c(w) [N/m^2]: reflection-shaped rise to
// 0.5 rho g B with B the summed column breadth. Replaceable by user tables.
std::vector<double> default_drift_coefficients(const hull::HullShape& shape,
                                               std::span<const double> omega,
                                               double depth);

// Newman approximation, one-sum form: F(t) = 2 [sum_i a_i sqrt(Tc_i) cos(w_i t
// + phi_i)]^2. Returns the force series on the same time grid as the phases.
std::vector<double> newman_slow_drift_series(std::span<const double> amplitude,
                                             std::span<const double> phase,
                                             std::span<const double> omega,
                                             std::span<const double> drift_coeff,
                                             int n_samples);

// Difference-frequency force spectrum S_F(mu) = 8 int S(w) S(w+mu) Tc(w+mu/2)^2 dw.
std::vector<double> newman_force_spectrum(std::span<const double> omega,
                                          std::span<const double> s_eta,
                                          std::span<const double> drift_coeff,
                                          std::span<const double> mu);

}  // namespace fowt::hydro
