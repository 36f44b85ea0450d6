#include "uavvlc/vlc_channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uavvlc {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

void require(bool ok, const char* field, const char* rule) {
  if (!ok) {
    throw std::invalid_argument(std::string("VlcParams.") + field + ": " + rule);
  }
}

} // namespace

void VlcParams::validate() const {
  require(semi_angle_half_power_deg > 0.0 && semi_angle_half_power_deg < 90.0,
          "semi_angle_half_power", "must lie in (0, 90) degrees");
  require(fov_semi_angle_deg > 0.0 && fov_semi_angle_deg <= 90.0,
          "fov_semi_angle", "must lie in (0, 90] degrees");
  require(detector_area_m2 > 0.0, "detector_area", "must be positive");
  require(refractive_index >= 1.0, "refractive_index", "must be >= 1");
  require(noise_std > 0.0, "noise_std", "must be positive");
  require(distance_exponent == 1 || distance_exponent == 2,
          "distance_exponent", "must be 1 or 2");
}

double noise_from_db(double db) { return std::pow(10.0, db / 10.0); }

LambertOrder lambert_order(double semi_angle_half_power_deg) {
  if (!(semi_angle_half_power_deg > 0.0 && semi_angle_half_power_deg < 90.0)) {
    throw std::domain_error("lambert_order: semi-angle must lie in (0, 90) degrees");
  }
  const double c = std::cos(semi_angle_half_power_deg * kDegToRad);
  return {-std::numbers::ln2 / std::log(c)};
}

LinkGeometry link_geometry(const Position3& uav, const Position3& receiver) {
  const double dx = uav.x - receiver.x;
  const double dy = uav.y - receiver.y;
  const double dz = uav.z - receiver.z;
  const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
  const double c = dz / d;
  return {d, c, std::acos(std::min(1.0, c)) / kDegToRad};
}

double distance(const Position3& uav, const Position3& receiver) {
  return link_geometry(uav, receiver).distance;
}

double concentrator_gain(double incidence_deg, const VlcParams& params) {
  if (incidence_deg >= params.fov_semi_angle_deg) {
    return 0.0;
  }
  const double s = std::sin(params.fov_semi_angle_deg * kDegToRad);
  return params.refractive_index * params.refractive_index / (s * s);
}

double channel_gain(const Position3& uav, const Position3& receiver,
                    const VlcParams& params) {
  if (!(uav.z > receiver.z)) {
    throw std::domain_error("channel_gain: transmitter must be above the receiver");
  }
  const LinkGeometry geo = link_geometry(uav, receiver);
  const double g = concentrator_gain(geo.incidence_deg, params);
  if (g == 0.0) {
    return 0.0;
  }
  const double m = lambert_order(params.semi_angle_half_power_deg).m;
  const double path = params.distance_exponent == 2
                          ? geo.distance * geo.distance
                          : geo.distance;
  return (m + 1.0) * params.detector_area_m2 / (2.0 * std::numbers::pi * path) *
         g * std::pow(geo.cos_incidence, m) * geo.cos_incidence;
}

double total_received_power(std::span<const Transmitter> uavs,
                            const Position3& receiver, const VlcParams& params) {
  double total = 0.0;
  for (const Transmitter& tx : uavs) {
    const double h = channel_gain(tx.position, receiver, params);
    if (h > 0.0) {
      total += tx.adjust_factor * h * tx.power_w;
    }
  }
  return total;
}

double rate_from_terms(double signal_sq, double interference_sq, double noise) {
  const double sinr = std::numbers::e / (2.0 * std::numbers::pi) * signal_sq /
                      (interference_sq + noise);
  return 0.5 * std::log2(1.0 + sinr);
}

namespace {

double rate_at(std::size_t index, std::span<const Transmitter> uavs,
               const Position3& receiver, const VlcParams& params,
               bool require_link) {
  if (index >= uavs.size()) {
    throw std::out_of_range("rate: transmitter index out of range");
  }
  double signal = 0.0;
  double interference = 0.0;
  for (std::size_t r = 0; r < uavs.size(); ++r) {
    const double h = channel_gain(uavs[r].position, receiver, params);
    const double amplitude = uavs[r].power_w * h;
    if (r == index) {
      if (h == 0.0) {
        if (require_link) {
          throw std::domain_error("achievable_rate: serving UAV cannot reach the receiver");
        }
        return 0.0;
      }
      signal = amplitude * amplitude;
    } else if (h > 0.0) {
      interference += amplitude * amplitude;
    }
  }
  return rate_from_terms(signal, interference, params.noise_std);
}

} // namespace

double achievable_rate(std::size_t serving, std::span<const Transmitter> uavs,
                       const Position3& receiver, const VlcParams& params) {
  return rate_at(serving, uavs, receiver, params, true);
}

double eavesdropper_rate(std::size_t uav_index,
                         std::span<const Transmitter> uavs,
                         const Position3& eavesdropper,
                         const VlcParams& params) {
  return rate_at(uav_index, uavs, eavesdropper, params, false);
}

ChannelKernel::ChannelKernel(const VlcParams& params)
    : m_(lambert_order(params.semi_angle_half_power_deg).m),
      distance_exponent_(params.distance_exponent) {
  const double s = std::sin(params.fov_semi_angle_deg * kDegToRad);
  const double g = params.refractive_index * params.refractive_index / (s * s);
  prefactor_ = (m_ + 1.0) * params.detector_area_m2 / (2.0 * std::numbers::pi) * g;
  cos_fov_ = std::cos(params.fov_semi_angle_deg * kDegToRad);
  const double rounded = std::round(m_);
  if (std::abs(m_ - rounded) <= 1e-12 * std::max(1.0, rounded) && rounded <= 16.0) {
    integer_m_ = static_cast<int>(rounded);
  }
}

double ChannelKernel::cos_power(double c) const {
  if (integer_m_ < 0) {
    return std::pow(c, m_);
  }
  double out = 1.0;
  for (int i = 0; i < integer_m_; ++i) {
    out *= c;
  }
  return out;
}

} // namespace uavvlc
