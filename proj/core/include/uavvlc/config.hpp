#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uavvlc/bench.hpp"

namespace uavvlc {

/// Malformed or invalid run configuration. The message names the offending
/// field or the line and column of a syntax error.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
  std::string label = "custom";
  Region region;
  std::size_t uav_count = 8;
  std::size_t grid_per_side = 80;
  double altitude = 8.0;
  /// Ground (x, y); defaults to 75% of the way across the region on both axes.
  std::optional<std::array<double, 2>> eavesdropper;
  /// Explicit (x, y) starts at altitude; otherwise drawn from start_seed.
  std::optional<std::vector<std::array<double, 2>>> start_positions;
  std::uint64_t start_seed = 1;
  PowerBounds power_bounds;
  double cruise_speed = 16.0;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

struct VlcConfig {
  double semi_angle_half_power_deg = 60.0;
  double fov_semi_angle_deg = 60.0;
  double detector_area_m2 = 1.0e-4;
  double refractive_index = 1.5;
  double noise_db = -110.0;
  int distance_exponent = 2;

  VlcParams to_params() const;

  friend bool operator==(const VlcConfig&, const VlcConfig&) = default;
};

struct AlgorithmConfig {
  std::vector<Algorithm> names{Algorithm::Moead, Algorithm::MoeadCicm, Algorithm::Random,
                               Algorithm::Uniform};
  std::size_t population = 50;
  std::size_t iterations = 200;
  std::size_t mating_size = 0;
  std::size_t replacement_size = 0;
  std::size_t archive_capacity = 500;
  CicmParams cicm;

  friend bool operator==(const AlgorithmConfig&, const AlgorithmConfig&) = default;
};

struct RunBlock {
  std::vector<std::uint64_t> seeds{1};
  /// Empty means "use the command line or environment default".
  std::string output_dir;
  std::size_t jobs = 1;

  friend bool operator==(const RunBlock&, const RunBlock&) = default;
};

struct RunConfig {
  ScenarioConfig scenario;
  VlcConfig vlc;
  RotorcraftParams rotor;
  AlgorithmConfig algorithm;
  RunBlock run;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses JSON text; omitted fields keep their defaults, unknown keys are
/// rejected. `source` prefixes syntax-error diagnostics.
RunConfig parse_config_text(const std::string& text, const std::string& source = "<config>");

RunConfig parse_config(const std::filesystem::path& path);

/// Effective configuration as JSON; parse_config_text reproduces it exactly.
std::string serialize_config(const RunConfig& config);

/// Throws ConfigError naming the first violated invariant.
void validate_config(const RunConfig& config);

/// Geometry presets: 1 = 8 UAVs over 8 x 8 m with an 80 x 80 grid,
/// 2 = 12 UAVs over 10 x 10 m with a 100 x 100 grid, both at 8 m.
void apply_case_preset(RunConfig& config, int case_number);

/// Validates and materialises the scenario (grid, eavesdropper, starts).
Scenario build_scenario(const RunConfig& config);

ExperimentBudget build_budget(const RunConfig& config);

} // namespace uavvlc
