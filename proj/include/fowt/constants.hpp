#pragma once

namespace fowt {

inline constexpr double kPi = 3.14159265358979323846;

// Sea water and air at standard conditions.
inline constexpr double kWaterDensity = 1025.0;  // [kg/m^3]
inline constexpr double kAirDensity = 1.225;     // [kg/m^3]
inline constexpr double kGravity = 9.81;         // [m/s^2]

inline constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace fowt
