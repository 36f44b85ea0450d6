#pragma once

#include "uavvlc/vlc_channel.hpp"

namespace uavvlc {

/// Rotary-wing propulsion model parameters. All fields must be positive.
struct RotorcraftParams {
  double blade_profile_power_w = 79.86;
  double induced_power_w = 88.63;
  double tip_speed = 120.0;
  double mean_induced_velocity = 4.03;
  double fuselage_drag_ratio = 0.6;
  double rotor_solidity = 0.05;
  double air_density = 1.225;
  double rotor_disc_area = 0.503;

  void validate() const;

  friend bool operator==(const RotorcraftParams&, const RotorcraftParams&) = default;
};

/// Propulsion power (W) at forward speed V: blade-profile, induced and
/// parasite terms. Throws std::domain_error for negative speed.
double propulsion_power(double speed, const RotorcraftParams& params);

double horizontal_distance(const Position3& a, const Position3& b);

/// Energy (J) for level flight from `start` to `end` at constant `speed`,
/// ignoring acceleration phases. Throws std::domain_error for speed <= 0 or
/// mismatched altitudes.
double motion_energy(const Position3& start, const Position3& end, double speed,
                     const RotorcraftParams& params);

} // namespace uavvlc
