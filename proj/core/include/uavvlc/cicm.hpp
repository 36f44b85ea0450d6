#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "uavvlc/moead.hpp"

namespace uavvlc {

/// Parameters of the chaos-initialised, crossover-mutation variant.
struct CicmParams {
  /// Circle map x' = mod(x + b - (a / 2 pi) sin(2 pi x), 1).
  double circle_a = 0.5;
  double circle_b = 0.2;
  /// Splits the two branches of the mutation scale schedule.
  double mutation_probability = 0.5;
  /// Shape exponent of the schedule.
  unsigned mutation_shape = 3;
  /// Length of the schedule; run_moead_cicm sets it to the iteration budget.
  std::size_t iterations_total = 200;

  void validate() const;

  friend bool operator==(const CicmParams&, const CicmParams&) = default;
};

/// One step of the circle map. Result lies in [0, 1).
double circle_map_step(double x, const CicmParams& params);

/// Stateful circle-map sequence.
class CircleMap {
public:
  CircleMap(double x0, const CicmParams& params);

  double next();
  double state() const { return x_; }

private:
  double x_;
  double a_;
  double b_;
};

/// `count` successive iterates affinely mapped onto [min_w, max_w].
std::vector<double> chaos_powers(CircleMap& map, std::size_t count, const PowerBounds& bounds);

/// Power genes for `uav_count` UAVs from a map started at a seed-derived
/// x0 in (0, 1).
std::vector<double> chaos_init_powers(std::size_t uav_count, const PowerBounds& bounds,
                                      std::uint64_t seed, const CicmParams& params);

/// Population whose power genes come from one circle-map stream and whose
/// positions are uniform random. Draw order: x0, then per individual U x
/// genes and U y genes.
std::vector<Individual> chaos_population(const Scenario& scenario, std::size_t count,
                                         const CicmParams& params, Rng& rng);

struct IndividualParts {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> z;
  std::vector<double> power;
};

IndividualParts split_individual(const Individual& ind);
Individual join_individual(const IndividualParts& parts);

struct SegmentBounds {
  double lo{};
  double hi{};

  double midpoint() const { return 0.5 * (lo + hi); }
  double clamp(double v) const;
};

/// Threshold crossover: child_a[i] = a[i] if a[i] <= midpoint else b[i];
/// child_b symmetric with the roles swapped. Results are clamped.
std::pair<std::vector<double>, std::vector<double>>
uniform_crossover(std::span<const double> a, std::span<const double> b, SegmentBounds bounds);

/// Mutation scale for draw q at 1-based iteration `iteration`.
double mutation_beta(double q, std::size_t iteration, const CicmParams& params);

/// result[i] = b[i] - (b[i] - a[i]) * steps[i], clamped to bounds.
std::vector<double> mutate_toward(std::span<const double> a, std::span<const double> b,
                                  std::span<const double> steps, SegmentBounds bounds);

/// Draws q for the schedule, then one uniform per gene, and applies
/// mutate_toward with steps rand_i * beta(q).
std::vector<double> scheduled_mutation(std::span<const double> child_a,
                                       std::span<const double> child_b, SegmentBounds bounds,
                                       std::size_t iteration, const CicmParams& params, Rng& rng);

/// One offspring for `subproblem`: two distinct parents from its mating
/// neighborhood, threshold crossover and scheduled mutation on the x, y and
/// power segments, altitude untouched, then repair.
Individual cicm_reproduce(const DecompositionState& state, std::size_t subproblem,
                          std::size_t iteration, const Scenario& scenario,
                          const CicmParams& params, Rng& rng);

/// Decomposition run with chaos initialisation and cicm_reproduce.
RunResult run_moead_cicm(const Scenario& scenario, const MoeadParams& params,
                         const CicmParams& cicm);

} // namespace uavvlc
