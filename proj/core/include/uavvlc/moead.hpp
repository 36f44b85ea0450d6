#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "uavvlc/archive.hpp"
#include "uavvlc/problem.hpp"
#include "uavvlc/rng.hpp"

namespace uavvlc {

struct WeightVector {
  std::array<double, kObjectiveCount> components{};

  double operator[](std::size_t i) const { return components[i]; }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Simplex-lattice weights {(i/H, j/H, k/H) : i + j + k = H} for the
/// smallest H whose lattice holds at least `target` vectors. The returned
/// size is the population size. Throws for target < 3.
std::vector<WeightVector> generate_weights(std::size_t target);

/// For every weight, the indices of the `size` nearest weights by Euclidean
/// distance, self first, ties broken by lower index.
std::vector<std::vector<std::size_t>> build_neighborhoods(std::span<const WeightVector> weights,
                                                          std::size_t size);

/// max_i w_i * |f_i - z*_i|
double tchebycheff(const ObjectiveVector& fv, const WeightVector& weight,
                   const ObjectiveVector& ideal);

ObjectiveVector update_ideal(const ObjectiveVector& ideal, const ObjectiveVector& fv);

/// Child takes genes [0, cut) from a and [cut, end) from b. No repair.
Individual single_point_crossover(const Individual& a, const Individual& b, std::size_t cut);

/// Single-point crossover at a uniform cut in [0, genes], then repair.
Individual genetic_crossover(const Individual& a, const Individual& b, Rng& rng,
                             const Scenario& scenario);

struct DecompositionState {
  std::vector<WeightVector> weights;
  std::vector<std::vector<std::size_t>> mating_neighborhoods;
  std::vector<std::vector<std::size_t>> replacement_neighborhoods;
  std::vector<Individual> population;
  std::vector<ObjectiveVector> fitness;
  ObjectiveVector ideal;
};

/// Replaces every member j of the replacement neighborhood of `subproblem`
/// whose Tchebycheff value under weight j is not better than the
/// candidate's. Returns the number of replacements.
std::size_t neighborhood_replace(DecompositionState& state, std::size_t subproblem,
                                 const Individual& candidate, const ObjectiveVector& candidate_fv);

/// Picks two distinct members of a mating neighborhood, in selection order.
std::array<std::size_t, 2> select_parents(std::span<const std::size_t> neighborhood, Rng& rng);

struct MoeadParams {
  std::size_t population_target = 50;
  std::size_t iterations = 200;
  /// 0 selects 10% of the population, at least 2.
  std::size_t mating_size = 0;
  std::size_t replacement_size = 0;
  std::uint64_t seed = 1;
  std::size_t archive_capacity = 500;
};

/// Neighborhood size actually used for a configured value and population.
std::size_t resolve_neighborhood_size(std::size_t configured, std::size_t population);

struct IterationMetrics {
  std::size_t iteration{};
  ObjectiveVector ideal;
  std::size_t archive_size{};
  ObjectiveVector mean;
};

struct RunResult {
  std::vector<Individual> initial_population;
  std::vector<ObjectiveVector> initial_fitness;
  std::vector<Individual> population;
  std::vector<ObjectiveVector> fitness;
  std::vector<WeightVector> weights;
  ParetoArchive archive;
  /// Entry 0 describes the initial population; entry k the state after iteration k.
  std::vector<IterationMetrics> metrics;
};

using PopulationInitializer =
    std::function<std::vector<Individual>(const Scenario&, std::size_t count, Rng&)>;

/// Produces one feasible offspring for `subproblem` at 1-based `iteration`.
using Reproducer = std::function<Individual(const DecompositionState&, std::size_t subproblem,
                                            std::size_t iteration, Rng&)>;

/// Decomposition loop shared by the conventional and chaos-initialised
/// variants. Generations are sequential; every random draw comes from one
/// stream seeded by params.seed.
RunResult run_decomposition(const Scenario& scenario, const MoeadParams& params,
                            const PopulationInitializer& init, const Reproducer& reproduce);

/// Uniform positions in the region at altitude H and uniform powers.
/// Draw order: U x genes, U y genes, U power genes.
Individual random_individual(const Scenario& scenario, Rng& rng);

std::vector<Individual> random_population(const Scenario& scenario, std::size_t count, Rng& rng);

/// Conventional MOEA/D: random initialisation and genetic crossover.
RunResult run_moead(const Scenario& scenario, const MoeadParams& params);

} // namespace uavvlc
