#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fowt::hull {

// Free variables of the hull shape family: column spacing from the platform
// centerline and heave plate height. The heave-plate-to-column radius ratio
// is saturated geometrically so plates of neighboring columns never touch.
struct ShapeParams {
  double column_spacing = 24.0;    // d [m]
  double plate_height = 4.5;       // h_hp [m]
  double plate_ratio_target = 2.0; // intended r_hp / r [-]
};

struct HullShape {
  ShapeParams params;
  double column_radius = 0.0;  // r [m]
  double plate_radius = 0.0;   // r_hp [m]
  double draft = 0.0;          // t [m], keel at z = -t
  double freeboard = 10.0;     // column top above SWL [m]

  // Plan-view column centers: one column on the downwind x axis, the other
  // two 120 deg apart.
  std::array<std::array<double, 2>, 3> column_positions() const;

  double column_bottom() const { return -draft + params.plate_height; }
  double keel() const { return -draft; }
};

// Table of structural assumptions (material properties, wall thicknesses,
// processed-material costs).
struct MaterialProps {
  double concrete_density = 2750.0;  // [kg/m^3]
  double steel_density = 7750.0;     // [kg/m^3]
  double ballast_density = 2500.0;   // [kg/m^3]
  double steel_cost = 4500.0;        // [EUR/t]
  double concrete_cost = 399.0;      // [EUR/t]
  double column_wall = 0.6;          // [m]
  double plate_lid = 0.4;            // [m]
};

// Tower and rotor-nacelle assembly mass properties needed by the platform
// design loop. Values ship with the turbine configuration.
struct TurbineMassProps {
  double tower_mass = 628.0e3;  // [kg]
  double tower_cm_z = 61.0;     // [m above SWL]
  double rna_mass = 674.0e3;    // [kg]
  double rna_cm_z = 119.0;      // [m above SWL]
  double tower_pitch_inertia_cm = 4.0e8;  // [kg m^2]
  double rna_pitch_inertia_cm = 1.0e8;    // [kg m^2]
};

struct ComponentMass {
  double mass = 0.0;        // [kg]
  double z_cm = 0.0;        // [m, SWL-referenced, up positive]
  double inertia_cm = 0.0;  // pitch inertia about own CM [kg m^2]
};

struct MassBreakdown {
  ComponentMass columns;       // three concrete columns
  ComponentMass heave_plates;  // three concrete plate drums
  ComponentMass tripod;        // steel tripod
  ComponentMass tower;
  ComponentMass rna;
  ComponentMass ballast;
  double ballast_fill_height = 0.0;  // above inner drum bottom [m]

  double platform_mass() const;  // columns + plates + tripod + ballast [kg]
  double total_mass() const;     // platform + tower + RNA [kg]
  double z_cm_platform() const;
  double z_cm_total() const;
  double pitch_inertia_about(double z_ref) const;  // whole system [kg m^2]
};

struct Hydrostatics {
  double volume = 0.0;       // displaced volume [m^3]
  double z_b = 0.0;          // center of buoyancy [m]
  double waterplane_area = 0.0;    // A_wp [m^2]
  double waterplane_inertia = 0.0; // I_wp [m^4]
  double gm = 0.0;           // metacentric height [m]
  double c33 = 0.0;          // heave restoring [N/m]
  double c55 = 0.0;          // pitch restoring [Nm/rad]
};

struct FairleadGeometry {
  double z = 8.7;       // above SWL [m]
  double radius = 26.0; // from centerline [m]
};

struct Design {
  std::string id;
  HullShape shape;
  MassBreakdown mass;
  Hydrostatics hydrostatics;
  FairleadGeometry fairleads;
  double material_cost = 0.0;  // [EUR]
};

struct TripodProps {
  double strut_width = 0.0;     // width and height [m]
  double wall_thickness = 0.0;  // [m]
  double mass = 0.0;            // [kg]
};

struct DesignConfig {
  MaterialProps materials;
  TurbineMassProps turbine;
  double c55_target = 2.255e9;      // [Nm/rad]
  double freeboard = 10.0;          // [m]
  double draft_max = 80.0;          // [m]
  double mooring_vertical_load = 0.0;  // static downward pull [N]
  bool ballast_fills_plates = true;    // fill plate drums before columns
  double tripod_cm_z = 17.5;        // [m above SWL]
  double draft_tol = 1e-3;          // bisection tolerance [m]
};

struct DesignGrid {
  double d_min = 15.0;
  double d_max = 24.0;
  double d_step = 1.0;
  std::vector<double> plate_heights = {1.0, 4.5, 8.0};
  double plate_ratio_target = 2.0;
};

// Dependent geometry from the free variables at a given draft. The column
// radius is 52% of the maximum radius d*sqrt(3)/2 at which columns touch;
// the plate ratio saturates exponentially toward that same geometric limit.
HullShape derive_geometry(const ShapeParams& params, double draft,
                          double freeboard = 10.0);

// Linear interpolation of the steel tripod between the published d = 10 m
// and d = 35 m designs. Refuses extrapolation.
TripodProps tripod_properties(double column_spacing);

// Structural (dry, unballasted) mass distribution.
MassBreakdown structural_mass(const HullShape& shape, const MaterialProps& mat,
                              const TurbineMassProps& turbine);

// Adds ballast so that weight + mooring pull balances buoyancy at the given
// draft, split equally among the three columns. Throws if the required
// ballast is negative; returns false if it does not fit inside the hull.
bool solve_ballast(const HullShape& shape, const MaterialProps& mat,
                   double mooring_vertical_load, bool fill_plates,
                   MassBreakdown& mass);

Hydrostatics hydrostatics(const HullShape& shape, const MassBreakdown& mass);

// Cost of processed material: steel price on the tripod, concrete price on
// columns and heave plates. Ballast, tower and RNA are excluded.
double estimate_cost(const MassBreakdown& mass, const MaterialProps& mat);

// Draft root-finding under the pitch-restoring constraint. Returns nullopt
// when no draft in [h_hp + 1, draft_max] satisfies the constraint.
std::optional<Design> solve_draft_for_c55(const ShapeParams& params,
                                          const DesignConfig& config);

std::vector<Design> build_design_space(const DesignGrid& grid,
                                       const DesignConfig& config);

std::string design_json(const Design& d);

}  // namespace fowt::hull
