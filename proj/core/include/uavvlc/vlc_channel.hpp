#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace uavvlc {

struct Position3 {
  double x{};
  double y{};
  double z{};

  friend bool operator==(const Position3&, const Position3&) = default;
};

/// Optical front-end and link parameters. Angles are in degrees.
struct VlcParams {
  double semi_angle_half_power_deg = 60.0;
  double fov_semi_angle_deg = 60.0;
  double detector_area_m2 = 1.0e-4;
  double refractive_index = 1.5;
  /// Noise term of the rate expression, linear units (see noise_from_db).
  double noise_std = 1.0e-11;
  /// Path-loss exponent on distance: 2 for the physical inverse-square
  /// Lambertian model, 1 for the first-power variant.
  int distance_exponent = 2;

  /// Throws std::invalid_argument naming the first violated field.
  void validate() const;

  friend bool operator==(const VlcParams&, const VlcParams&) = default;
};

/// 10^(db / 10).
double noise_from_db(double db);

struct LambertOrder {
  double m{};
};

/// m = -ln 2 / ln(cos semi_angle). Throws std::domain_error outside (0, 90).
LambertOrder lambert_order(double semi_angle_half_power_deg);

/// Link geometry for a downward-facing transmitter and an upward-facing
/// receiver: the irradiance and incidence angles coincide.
struct LinkGeometry {
  double distance{};
  double cos_incidence{};
  double incidence_deg{};
};

LinkGeometry link_geometry(const Position3& uav, const Position3& receiver);
double distance(const Position3& uav, const Position3& receiver);

/// n_r^2 / sin^2(fov) inside the field of view, zero at and beyond it.
double concentrator_gain(double incidence_deg, const VlcParams& params);

/// Line-of-sight DC gain. Zero when the incidence angle reaches the FOV.
/// Throws std::domain_error if the UAV is not strictly above the receiver.
double channel_gain(const Position3& uav, const Position3& receiver,
                    const VlcParams& params);

struct Transmitter {
  Position3 position;
  double power_w{};
  double adjust_factor = 1.0;
};

/// Sum of adjust * gain * power over transmitters that reach the receiver.
double total_received_power(std::span<const Transmitter> uavs,
                            const Position3& receiver, const VlcParams& params);

/// 0.5 * log2(1 + e/(2 pi) * signal / (interference + noise)), where the
/// signal and interference terms are squared received amplitudes.
double rate_from_terms(double signal_sq, double interference_sq, double noise);

/// Rate from transmitter `serving` at `receiver`, with every other
/// transmitter in view counted as interference. Throws std::domain_error
/// when the serving link has zero gain.
double achievable_rate(std::size_t serving, std::span<const Transmitter> uavs,
                       const Position3& receiver, const VlcParams& params);

/// Same expression as achievable_rate, but an out-of-view eavesdropper
/// yields 0 instead of an error.
double eavesdropper_rate(std::size_t uav_index,
                         std::span<const Transmitter> uavs,
                         const Position3& eavesdropper,
                         const VlcParams& params);

/// Precomputed form of channel_gain for inner loops over receiver grids.
class ChannelKernel {
public:
  explicit ChannelKernel(const VlcParams& params);

  /// Gain for a horizontal offset (dx, dy) and a vertical separation
  /// height > 0. Agrees with channel_gain to rounding.
  double gain(double dx, double dy, double height) const {
    const double d2 = dx * dx + dy * dy + height * height;
    const double d = std::sqrt(d2);
    const double cos_psi = height / d;
    if (cos_psi <= cos_fov_) {
      return 0.0;
    }
    const double path = distance_exponent_ == 2 ? d2 : d;
    return prefactor_ * cos_power(cos_psi) * cos_psi / path;
  }

  double lambert_m() const { return m_; }

private:
  double cos_power(double c) const;

  double m_{};
  double prefactor_{};
  double cos_fov_{};
  int distance_exponent_{2};
  int integer_m_{-1};
};

} // namespace uavvlc
