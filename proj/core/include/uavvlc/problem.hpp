#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "uavvlc/uav_energy.hpp"
#include "uavvlc/vlc_channel.hpp"

namespace uavvlc {

inline constexpr std::size_t kObjectiveCount = 3;

/// f1 is reported in squared microwatts: the linear-watt variance scaled
/// by this constant.
inline constexpr double kUniformityReportScale = 1.0e12;

struct Region {
  double x_min = 0.0;
  double x_max = 8.0;
  double y_min = 0.0;
  double y_max = 8.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  bool contains(double x, double y) const {
    return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
  }

  friend bool operator==(const Region&, const Region&) = default;
};

struct PowerBounds {
  double min_w = 0.1;
  double max_w = 10.0;

  friend bool operator==(const PowerBounds&, const PowerBounds&) = default;
};

/// Receiver lattice shape; {N, 1} for an unstructured receiver list.
struct GridShape {
  std::size_t nx = 0;
  std::size_t ny = 0;
};

/// Plain description of a deployment problem, validated when a Scenario is
/// built from it.
struct ScenarioDescription {
  Region region;
  double altitude = 8.0;
  std::size_t uav_count = 8;
  std::vector<Position3> receivers;
  GridShape grid;
  Position3 eavesdropper;
  std::vector<Position3> start_positions;
  PowerBounds power_bounds;
  double cruise_speed = 16.0;
  VlcParams vlc;
  RotorcraftParams rotor;
};

/// Immutable, validated world description. Safe to share across threads.
class Scenario {
public:
  /// Throws std::invalid_argument naming the violated invariant.
  explicit Scenario(ScenarioDescription description);

  const Region& region() const { return d_.region; }
  double altitude() const { return d_.altitude; }
  std::size_t uav_count() const { return d_.uav_count; }
  std::size_t gene_count() const { return 4 * d_.uav_count; }
  std::span<const Position3> receivers() const { return d_.receivers; }
  GridShape grid() const { return d_.grid; }
  const Position3& eavesdropper() const { return d_.eavesdropper; }
  std::span<const Position3> start_positions() const { return d_.start_positions; }
  const PowerBounds& power_bounds() const { return d_.power_bounds; }
  double cruise_speed() const { return d_.cruise_speed; }
  const VlcParams& vlc() const { return d_.vlc; }
  const RotorcraftParams& rotor() const { return d_.rotor; }
  const ChannelKernel& kernel() const { return kernel_; }
  const ScenarioDescription& description() const { return d_; }

private:
  ScenarioDescription d_;
  ChannelKernel kernel_;
};

/// One candidate deployment. Genes are laid out as
/// [x_1..x_U, y_1..y_U, z_1..z_U, P_1..P_U].
class Individual {
public:
  Individual() = default;
  explicit Individual(std::vector<double> genes);

  static Individual from_parts(std::span<const double> x, std::span<const double> y,
                               std::span<const double> z, std::span<const double> power);

  std::size_t uav_count() const { return genes_.size() / 4; }
  std::span<const double> genes() const { return genes_; }
  std::span<double> genes() { return genes_; }

  std::span<const double> x() const { return segment(0); }
  std::span<const double> y() const { return segment(1); }
  std::span<const double> z() const { return segment(2); }
  std::span<const double> power() const { return segment(3); }

  Position3 hover_position(std::size_t uav) const;

  friend bool operator==(const Individual&, const Individual&) = default;

private:
  std::span<const double> segment(std::size_t k) const {
    const std::size_t u = uav_count();
    return std::span<const double>(genes_).subspan(k * u, u);
  }

  std::vector<double> genes_;
};

struct ObjectiveVector {
  std::array<double, kObjectiveCount> values{};

  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  double f1() const { return values[0]; }
  double f2() const { return values[1]; }
  double f3() const { return values[2]; }

  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

/// Transmitters described by an individual (adjust factor 1 everywhere).
std::vector<Transmitter> transmitters(const Individual& ind);

/// Total received optical power (W) at every receiver, in scenario order.
std::vector<double> received_powers(const Individual& ind, const Scenario& scenario);

double average_received_power(const Individual& ind, const Scenario& scenario);

/// Population variance (divisor N) of a list of powers, in the input unit squared.
double power_variance(std::span<const double> powers);

/// f1: variance of received power over the receiver grid, reported in uW^2.
double objective_uniformity(const Individual& ind, const Scenario& scenario);

/// f2: information rate summed over UAVs at the eavesdropper (bps/Hz).
double objective_leakage(const Individual& ind, const Scenario& scenario);

/// f3: level-flight energy (J) from each start position to its hover point.
double objective_energy(const Individual& ind, const Scenario& scenario);

/// Deterministic (f1, f2, f3). Throws std::invalid_argument for an
/// infeasible individual; repair first.
ObjectiveVector evaluate(const Individual& ind, const Scenario& scenario);

bool is_feasible(const Individual& ind, const Scenario& scenario);

/// Clamps x, y and power into their boxes and resets altitudes to H.
/// Throws std::invalid_argument on a wrong gene count.
Individual repair(Individual ind, const Scenario& scenario);

/// n x n lattice of ground points spanning the region inclusively,
/// x varying fastest.
std::vector<Position3> make_receiver_grid(const Region& region, std::size_t n_per_side);

} // namespace uavvlc
