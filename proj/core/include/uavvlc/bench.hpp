#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uavvlc/cicm.hpp"
#include "uavvlc/moead.hpp"

namespace uavvlc {

enum class Algorithm { Moead, MoeadCicm, Random, Uniform };

std::string_view algorithm_name(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Positions uniform in the region at altitude H, powers uniform in bounds.
Individual random_deployment(const Scenario& scenario, std::uint64_t seed);

/// UAVs at the cell centres of an r x c partition of the region, with
/// r = floor(sqrt(U)) rows and c = ceil(U / r) columns filled row by row,
/// every power at the middle of the power range. Uses no randomness.
Individual uniform_deployment(const Scenario& scenario);

/// Received power over the scenario's receiver lattice.
struct PowerGrid {
  std::size_t nx{};
  std::size_t ny{};
  double origin_x{};
  double origin_y{};
  /// Region extent divided by the point count per axis.
  double cell_width{};
  double cell_height{};
  std::vector<Position3> points;
  std::vector<double> values;

  double cell_area() const { return cell_width * cell_height; }
};

PowerGrid power_grid(const Individual& ind, const Scenario& scenario);

struct AreaThreshold {
  enum class Policy { GridMean, FixedWatts };
  Policy policy = Policy::GridMean;
  double watts = 0.0;
};

/// Cell area times the number of cells whose power reaches the threshold.
double high_quality_area(const PowerGrid& grid, AreaThreshold threshold = {});

/// Min-max scaling onto [0, 1] per objective; a zero-width range only shifts.
struct Normalization {
  ObjectiveVector lo;
  ObjectiveVector hi;

  static Normalization fit(std::span<const ObjectiveVector> points);
  ObjectiveVector apply(const ObjectiveVector& v) const;
};

/// Index of the entry minimising the equal-weight Tchebycheff value of its
/// normalised objectives against `normalized_ideal` (lowest index on ties).
std::size_t knee_index(std::span<const ObjectiveVector> objectives,
                       const Normalization& normalization,
                       const ObjectiveVector& normalized_ideal);

struct ExperimentBudget {
  MoeadParams moead;
  CicmParams cicm;
  AreaThreshold area_threshold;
};

struct RunReport {
  Algorithm algorithm{};
  std::uint64_t seed{};
  ObjectiveVector knee;
  Individual knee_solution;
  double area_m2{};
  double hypervolume{};
  double wall_time_s{};
  ParetoArchive archive;
  std::vector<IterationMetrics> metrics;
  std::vector<Individual> initial_population;
  std::vector<ObjectiveVector> initial_fitness;
  PowerGrid grid;
};

struct SummaryRow {
  Algorithm algorithm{};
  std::size_t runs{};
  ObjectiveVector mean_knee;
  double mean_area_m2{};
  double mean_hypervolume{};
};

struct ExperimentResult {
  /// Algorithm-major: all seeds of the first algorithm, then the next.
  std::vector<RunReport> runs;
  std::vector<SummaryRow> summary;
  Normalization normalization;
  /// Hypervolume reference in normalised space.
  ObjectiveVector hv_reference;

  const RunReport* find(Algorithm algorithm, std::uint64_t seed) const;
};

/// Runs every (algorithm, seed) pair, then selects knee points, power maps,
/// areas and hypervolumes against a shared normalisation. `jobs` bounds the
/// number of concurrent runs; results do not depend on it.
ExperimentResult run_experiment(const Scenario& scenario, std::span<const Algorithm> algorithms,
                                std::span<const std::uint64_t> seeds,
                                const ExperimentBudget& budget, std::size_t jobs = 1);

} // namespace uavvlc
