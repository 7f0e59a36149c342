#include "fowt/hull.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "fowt/constants.hpp"

namespace fowt::hull {

namespace {

constexpr double kRadiusFraction = 0.52;  // r / r_max
constexpr double kRatioMax = 1.0 / kRadiusFraction;

double cylinder_shell_inertia(double mass, double r_out, double r_in, double length) {
  // Transverse axis through the CM of a hollow cylinder.
  return mass * ((r_out * r_out + r_in * r_in) / 4.0 + length * length / 12.0);
}

double disc_inertia(double mass, double radius, double thickness) {
  return mass * (radius * radius / 4.0 + thickness * thickness / 12.0);
}

}  // namespace

std::array<std::array<double, 2>, 3> HullShape::column_positions() const {
  const double d = params.column_spacing;
  const double y = d * std::sqrt(3.0) / 2.0;
  return {{{d, 0.0}, {-d / 2.0, y}, {-d / 2.0, -y}}};
}

double MassBreakdown::platform_mass() const {
  return columns.mass + heave_plates.mass + tripod.mass + ballast.mass;
}

double MassBreakdown::total_mass() const {
  return platform_mass() + tower.mass + rna.mass;
}

double MassBreakdown::z_cm_platform() const {
  double m = platform_mass();
  double mz = columns.mass * columns.z_cm + heave_plates.mass * heave_plates.z_cm +
              tripod.mass * tripod.z_cm + ballast.mass * ballast.z_cm;
  return m > 0.0 ? mz / m : 0.0;
}

double MassBreakdown::z_cm_total() const {
  double m = total_mass();
  double mz = columns.mass * columns.z_cm + heave_plates.mass * heave_plates.z_cm +
              tripod.mass * tripod.z_cm + ballast.mass * ballast.z_cm +
              tower.mass * tower.z_cm + rna.mass * rna.z_cm;
  return m > 0.0 ? mz / m : 0.0;
}

double MassBreakdown::pitch_inertia_about(double z_ref) const {
  const ComponentMass* parts[] = {&columns, &heave_plates, &tripod,
                                  &tower,   &rna,          &ballast};
  double inertia = 0.0;
  for (const ComponentMass* p : parts) {
    double dz = p->z_cm - z_ref;
    inertia += p->inertia_cm + p->mass * dz * dz;
  }
  return inertia;
}

HullShape derive_geometry(const ShapeParams& params, double draft, double freeboard) {
  if (params.column_spacing <= 0.0 || params.plate_height <= 0.0)
    throw std::invalid_argument("derive_geometry: d and h_hp must be positive");
  if (params.plate_ratio_target <= 1.0)
    throw std::invalid_argument("derive_geometry: plate ratio target must exceed 1");
  if (draft < params.plate_height || draft > 80.0)
    throw std::domain_error("derive_geometry: draft outside [h_hp, 80 m]");

  HullShape shape;
  shape.params = params;
  shape.draft = draft;
  shape.freeboard = freeboard;

  const double r_max = params.column_spacing * std::sqrt(3.0) / 2.0;
  shape.column_radius = kRadiusFraction * r_max;

  // Saturation of the plate/column radius ratio toward the geometric limit
  // 1/0.52 at which neighboring plates would touch.
  const double span = kRatioMax - 1.0;
  const double ratio =
      1.0 + span * (1.0 - std::exp(-(params.plate_ratio_target - 1.0) / span));
  shape.plate_radius = ratio * shape.column_radius;
  return shape;
}

TripodProps tripod_properties(double column_spacing) {
  constexpr double d_lo = 10.0, d_hi = 35.0;
  if (column_spacing < d_lo || column_spacing > d_hi)
    throw std::domain_error("tripod_properties: column spacing outside [10, 35] m");
  const double w = (column_spacing - d_lo) / (d_hi - d_lo);
  TripodProps p;
  p.strut_width = 5.0 + w * (7.0 - 5.0);
  p.wall_thickness = (50.0 + w * (60.0 - 50.0)) * 1e-3;
  p.mass = (447.0 + w * (1716.0 - 447.0)) * 1e3;
  return p;
}

MassBreakdown structural_mass(const HullShape& shape, const MaterialProps& mat,
                              const TurbineMassProps& turbine) {
  const double r = shape.column_radius;
  const double r_hp = shape.plate_radius;
  const double h_hp = shape.params.plate_height;
  const double wall = mat.column_wall;
  const double lid = mat.plate_lid;

  if (wall >= r) throw std::domain_error("structural_mass: wall thickness >= column radius");
  if (r_hp < r) throw std::domain_error("structural_mass: plate radius below column radius");

  MassBreakdown mass;

  // Columns: hollow concrete cylinders from the plate top to the freeboard top.
  const double col_len = (shape.draft - h_hp) + shape.freeboard;
  const double col_area = kPi * (r * r - (r - wall) * (r - wall));
  const double m_col = col_area * col_len * mat.concrete_density;
  mass.columns.mass = 3.0 * m_col;
  mass.columns.z_cm = shape.column_bottom() + col_len / 2.0;
  mass.columns.inertia_cm =
      3.0 * cylinder_shell_inertia(m_col, r, r - wall, col_len);

  // Heave plates: concrete drums of height h_hp with an outer cylindrical
  // wall and 0.4 m top and bottom lids.
  const double wall_h = std::max(h_hp - 2.0 * lid, 0.0);
  const double v_lids = 2.0 * kPi * r_hp * r_hp * lid;
  const double r_in = std::max(r_hp - wall, 0.0);
  const double v_wall = kPi * (r_hp * r_hp - r_in * r_in) * wall_h;
  const double m_plate = (v_lids + v_wall) * mat.concrete_density;
  mass.heave_plates.mass = 3.0 * m_plate;
  mass.heave_plates.z_cm = shape.keel() + h_hp / 2.0;
  const double m_lid = kPi * r_hp * r_hp * lid * mat.concrete_density;
  const double m_wall = v_wall * mat.concrete_density;
  const double lid_offset = h_hp / 2.0 - lid / 2.0;
  double i_plate = 2.0 * disc_inertia(m_lid, r_hp, lid) +
                   2.0 * m_lid * lid_offset * lid_offset +
                   cylinder_shell_inertia(m_wall, r_hp, r_in, wall_h);
  mass.heave_plates.inertia_cm = 3.0 * i_plate;

  TripodProps tripod = tripod_properties(shape.params.column_spacing);
  mass.tripod.mass = tripod.mass;
  mass.tripod.inertia_cm = tripod.mass * tripod.strut_width * tripod.strut_width / 6.0;

  mass.tower.mass = turbine.tower_mass;
  mass.tower.z_cm = turbine.tower_cm_z;
  mass.tower.inertia_cm = turbine.tower_pitch_inertia_cm;
  mass.rna.mass = turbine.rna_mass;
  mass.rna.z_cm = turbine.rna_cm_z;
  mass.rna.inertia_cm = turbine.rna_pitch_inertia_cm;
  return mass;
}

namespace {

double displaced_volume(const HullShape& shape) {
  const double r = shape.column_radius;
  const double r_hp = shape.plate_radius;
  const double h_hp = shape.params.plate_height;
  const double col_sub = shape.draft - h_hp;
  return 3.0 * (kPi * r * r * col_sub + kPi * r_hp * r_hp * h_hp);
}

}  // namespace

bool solve_ballast(const HullShape& shape, const MaterialProps& mat,
                   double mooring_vertical_load, bool fill_plates,
                   MassBreakdown& mass) {
  const double displacement = kWaterDensity * displaced_volume(shape);
  const double dry = mass.columns.mass + mass.heave_plates.mass + mass.tripod.mass +
                     mass.tower.mass + mass.rna.mass;
  const double required = displacement - dry - mooring_vertical_load / kGravity;
  if (required < -1.0)  // allow round-off at the zero-ballast edge
    throw std::domain_error("solve_ballast: negative ballast required, design infeasible");

  const double m_ballast = std::max(required, 0.0);
  const double per_column = m_ballast / 3.0;
  double volume = per_column / mat.ballast_density;

  // Fill from the inside bottom upward: plate drum interior first (when
  // enabled and present), then the column interior.
  const double lid = mat.plate_lid;
  const double wall = mat.column_wall;
  const double h_hp = shape.params.plate_height;
  const double drum_area = kPi * std::pow(shape.plate_radius - wall, 2);
  const double drum_height = std::max(h_hp - 2.0 * lid, 0.0);
  const double col_area = kPi * std::pow(shape.column_radius - wall, 2);
  const double col_height = (shape.draft - h_hp) + shape.freeboard;

  double z0 = shape.keel() + lid;  // inner drum bottom
  double fill = 0.0;
  double mz = 0.0;
  double inertia = 0.0;
  double v = volume;
  if (fill_plates && drum_height > 0.0) {
    double h = std::min(v / drum_area, drum_height);
    double m = h * drum_area * mat.ballast_density;
    mz += m * (z0 + h / 2.0);
    inertia += disc_inertia(m, shape.plate_radius - wall, h);
    v -= h * drum_area;
    fill += h;
  }
  if (v > 0.0) {
    double zc = shape.column_bottom();
    double h = v / col_area;
    if (h > col_height) return false;  // does not fit inside the columns
    double m = h * col_area * mat.ballast_density;
    mz += m * (zc + h / 2.0);
    inertia += disc_inertia(m, shape.column_radius - wall, h);
    fill = (fill_plates && drum_height > 0.0) ? (zc + h - z0) : h;
  }

  mass.ballast.mass = m_ballast;
  mass.ballast.z_cm = m_ballast > 0.0 ? (mz * 3.0) / m_ballast : 0.0;
  mass.ballast.inertia_cm = 3.0 * inertia;
  mass.ballast_fill_height = fill;
  return true;
}

Hydrostatics hydrostatics(const HullShape& shape, const MassBreakdown& mass) {
  const double r = shape.column_radius;
  const double r_hp = shape.plate_radius;
  const double h_hp = shape.params.plate_height;
  const double col_sub = shape.draft - h_hp;

  Hydrostatics h;
  const double v_col = kPi * r * r * col_sub;        // per column, below SWL
  const double v_plate = kPi * r_hp * r_hp * h_hp;   // per plate
  h.volume = 3.0 * (v_col + v_plate);

  const double z_col = -col_sub / 2.0;
  const double z_plate = shape.keel() + h_hp / 2.0;
  h.z_b = 3.0 * (v_col * z_col + v_plate * z_plate) / h.volume;

  h.waterplane_area = 3.0 * kPi * r * r;
  double x2 = 0.0;
  for (const auto& c : shape.column_positions()) x2 += c[0] * c[0];
  h.waterplane_inertia = 3.0 * kPi * std::pow(r, 4) / 4.0 + kPi * r * r * x2;

  const double z_cm = mass.z_cm_total();
  h.gm = h.z_b + h.waterplane_inertia / h.volume - z_cm;
  h.c33 = kWaterDensity * kGravity * h.waterplane_area;
  h.c55 = kWaterDensity * kGravity * h.volume * h.gm;
  return h;
}

double estimate_cost(const MassBreakdown& mass, const MaterialProps& mat) {
  const double t_steel = mass.tripod.mass / 1e3;
  const double t_concrete = (mass.columns.mass + mass.heave_plates.mass) / 1e3;
  return mat.steel_cost * t_steel + mat.concrete_cost * t_concrete;
}

namespace {

// Full design evaluation at a trial draft; returns nullopt when ballasting
// fails (negative or overflowing ballast).
std::optional<Design> evaluate_at_draft(const ShapeParams& params,
                                        const DesignConfig& config, double draft) {
  HullShape shape = derive_geometry(params, draft, config.freeboard);
  MassBreakdown mass = structural_mass(shape, config.materials, config.turbine);
  mass.tripod.z_cm = config.tripod_cm_z;
  try {
    if (!solve_ballast(shape, config.materials, config.mooring_vertical_load,
                       config.ballast_fills_plates, mass))
      return std::nullopt;
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  Design d;
  d.shape = shape;
  d.mass = mass;
  d.hydrostatics = hydrostatics(shape, mass);
  d.material_cost = estimate_cost(mass, config.materials);
  std::ostringstream id;
  id << "d" << params.column_spacing << "_hhp" << params.plate_height;
  d.id = id.str();
  return d;
}

}  // namespace

std::optional<Design> solve_draft_for_c55(const ShapeParams& params,
                                          const DesignConfig& config) {
  if (config.c55_target <= 0.0)
    throw std::invalid_argument("solve_draft_for_c55: target must be positive");

  auto residual = [&](double t) -> std::optional<double> {
    auto d = evaluate_at_draft(params, config, t);
    if (!d) return std::nullopt;
    return d->hydrostatics.c55 - config.c55_target;
  };

  double lo = params.plate_height + 1.0;
  double hi = config.draft_max;
  // March the lower end up past any infeasible (unballastable) region.
  std::optional<double> f_lo = residual(lo);
  while (!f_lo && lo < hi - 1.0) {
    lo += 1.0;
    f_lo = residual(lo);
  }
  std::optional<double> f_hi = residual(hi);
  if (!f_lo || !f_hi) return std::nullopt;
  if (*f_lo > 0.0 || *f_hi < 0.0) return std::nullopt;  // no sign change

  while (hi - lo > config.draft_tol) {
    double mid = 0.5 * (lo + hi);
    auto f = residual(mid);
    if (!f) return std::nullopt;
    if (*f < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return evaluate_at_draft(params, config, 0.5 * (lo + hi));
}

std::vector<Design> build_design_space(const DesignGrid& grid,
                                       const DesignConfig& config) {
  std::vector<Design> designs;
  for (double h_hp : grid.plate_heights) {
    for (double d = grid.d_min; d <= grid.d_max + 1e-9; d += grid.d_step) {
      ShapeParams p;
      p.column_spacing = d;
      p.plate_height = h_hp;
      p.plate_ratio_target = grid.plate_ratio_target;
      if (auto design = solve_draft_for_c55(p, config)) designs.push_back(*design);
    }
  }
  return designs;
}

std::string design_json(const Design& d) {
  nlohmann::json j;
  j["schema"] = "fowt.design v1";
  j["id"] = d.id;
  j["shape"] = {{"d", d.shape.params.column_spacing},
                {"h_hp", d.shape.params.plate_height},
                {"r", d.shape.column_radius},
                {"r_hp", d.shape.plate_radius},
                {"draft", d.shape.draft},
                {"freeboard", d.shape.freeboard}};
  auto comp = [](const ComponentMass& c) {
    return nlohmann::json{{"mass_t", c.mass / 1e3}, {"z_cm", c.z_cm}};
  };
  j["mass"] = {{"columns", comp(d.mass.columns)},
               {"heave_plates", comp(d.mass.heave_plates)},
               {"tripod", comp(d.mass.tripod)},
               {"tower", comp(d.mass.tower)},
               {"rna", comp(d.mass.rna)},
               {"ballast", comp(d.mass.ballast)},
               {"ballast_fill_height", d.mass.ballast_fill_height},
               {"platform_mass_t", d.mass.platform_mass() / 1e3},
               {"z_cm_platform", d.mass.z_cm_platform()},
               {"total_mass_t", d.mass.total_mass() / 1e3},
               {"z_cm_total", d.mass.z_cm_total()}};
  j["hydrostatics"] = {{"volume", d.hydrostatics.volume},
                       {"z_b", d.hydrostatics.z_b},
                       {"a_wp", d.hydrostatics.waterplane_area},
                       {"i_wp", d.hydrostatics.waterplane_inertia},
                       {"gm", d.hydrostatics.gm},
                       {"c33", d.hydrostatics.c33},
                       {"c55", d.hydrostatics.c55}};
  j["fairleads"] = {{"z", d.fairleads.z}, {"radius", d.fairleads.radius}};
  j["material_cost_eur"] = d.material_cost;
  return j.dump(2);
}

}  // namespace fowt::hull
