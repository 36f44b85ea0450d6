#include "uavvlc/uav_energy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace uavvlc {

void RotorcraftParams::validate() const {
  const auto positive = [](double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string("RotorcraftParams.") + field +
                                  ": must be positive");
    }
  };
  positive(blade_profile_power_w, "blade_profile_power");
  positive(induced_power_w, "induced_power");
  positive(tip_speed, "tip_speed");
  positive(mean_induced_velocity, "mean_induced_velocity");
  positive(fuselage_drag_ratio, "fuselage_drag_ratio");
  positive(rotor_solidity, "rotor_solidity");
  positive(air_density, "air_density");
  positive(rotor_disc_area, "rotor_disc_area");
}

double propulsion_power(double speed, const RotorcraftParams& p) {
  if (!(speed >= 0.0)) {
    throw std::domain_error("propulsion_power: speed must be non-negative");
  }
  const double v2 = speed * speed;
  const double v0_2 = p.mean_induced_velocity * p.mean_induced_velocity;
  const double blade = p.blade_profile_power_w * (1.0 + 3.0 * v2 / (p.tip_speed * p.tip_speed));
  const double induced =
      p.induced_power_w *
      std::sqrt(std::sqrt(1.0 + v2 * v2 / (4.0 * v0_2 * v0_2)) - v2 / (2.0 * v0_2));
  const double parasite = 0.5 * p.fuselage_drag_ratio * p.air_density *
                          p.rotor_solidity * p.rotor_disc_area * v2 * speed;
  return blade + induced + parasite;
}

double horizontal_distance(const Position3& a, const Position3& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double motion_energy(const Position3& start, const Position3& end, double speed,
                     const RotorcraftParams& params) {
  if (!(speed > 0.0)) {
    throw std::domain_error("motion_energy: speed must be positive");
  }
  if (start.z != end.z) {
    throw std::domain_error("motion_energy: only level flight is modelled");
  }
  const double length = horizontal_distance(start, end);
  if (length == 0.0) {
    return 0.0;
  }
  return propulsion_power(speed, params) * length / speed;
}

} // namespace uavvlc
