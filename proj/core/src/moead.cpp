#include "uavvlc/moead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace uavvlc {

std::vector<WeightVector> generate_weights(std::size_t target) {
  if (target < kObjectiveCount) {
    throw std::invalid_argument("generate_weights: target must be at least " +
                                std::to_string(kObjectiveCount));
  }
  std::size_t h = 1;
  while ((h + 2) * (h + 1) / 2 < target) {
    ++h;
  }
  const auto divisions = static_cast<double>(h);
  std::vector<WeightVector> out;
  out.reserve((h + 2) * (h + 1) / 2);
  for (std::size_t i = h + 1; i-- > 0;) {
    for (std::size_t j = h - i + 1; j-- > 0;) {
      const std::size_t k = h - i - j;
      out.push_back({{static_cast<double>(i) / divisions, static_cast<double>(j) / divisions,
                      static_cast<double>(k) / divisions}});
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> build_neighborhoods(std::span<const WeightVector> weights,
                                                          std::size_t size) {
  const std::size_t n = weights.size();
  if (size < 1 || size > n) {
    throw std::invalid_argument("build_neighborhoods: size must lie in [1, population]");
  }
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::pair<double, std::size_t>> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < kObjectiveCount; ++k) {
        const double d = weights[i][k] - weights[j][k];
        d2 += d * d;
      }
      // Self sorts first regardless of duplicate weights.
      order[j] = {j == i ? -1.0 : d2, j};
    }
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(size),
                      order.end());
    out[i].reserve(size);
    for (std::size_t k = 0; k < size; ++k) {
      out[i].push_back(order[k].second);
    }
  }
  return out;
}

double tchebycheff(const ObjectiveVector& fv, const WeightVector& weight,
                   const ObjectiveVector& ideal) {
  double worst = 0.0;
  for (std::size_t i = 0; i < kObjectiveCount; ++i) {
    worst = std::max(worst, weight[i] * std::abs(fv[i] - ideal[i]));
  }
  return worst;
}

ObjectiveVector update_ideal(const ObjectiveVector& ideal, const ObjectiveVector& fv) {
  ObjectiveVector out;
  for (std::size_t i = 0; i < kObjectiveCount; ++i) {
    out[i] = std::min(ideal[i], fv[i]);
  }
  return out;
}

Individual single_point_crossover(const Individual& a, const Individual& b, std::size_t cut) {
  const auto ga = a.genes();
  const auto gb = b.genes();
  if (ga.size() != gb.size()) {
    throw std::invalid_argument("crossover: parents differ in length");
  }
  if (cut > ga.size()) {
    throw std::invalid_argument("crossover: cut point beyond gene count");
  }
  std::vector<double> child(ga.begin(), ga.begin() + static_cast<std::ptrdiff_t>(cut));
  child.insert(child.end(), gb.begin() + static_cast<std::ptrdiff_t>(cut), gb.end());
  return Individual(std::move(child));
}

Individual genetic_crossover(const Individual& a, const Individual& b, Rng& rng,
                             const Scenario& scenario) {
  const std::size_t cut = rng.index(a.genes().size() + 1);
  return repair(single_point_crossover(a, b, cut), scenario);
}

std::size_t neighborhood_replace(DecompositionState& state, std::size_t subproblem,
                                 const Individual& candidate, const ObjectiveVector& candidate_fv) {
  std::size_t replaced = 0;
  for (std::size_t j : state.replacement_neighborhoods.at(subproblem)) {
    const WeightVector& w = state.weights[j];
    if (tchebycheff(candidate_fv, w, state.ideal) <= tchebycheff(state.fitness[j], w, state.ideal)) {
      state.population[j] = candidate;
      state.fitness[j] = candidate_fv;
      ++replaced;
    }
  }
  return replaced;
}

std::array<std::size_t, 2> select_parents(std::span<const std::size_t> neighborhood, Rng& rng) {
  const std::size_t n = neighborhood.size();
  if (n < 2) {
    throw std::invalid_argument("select_parents: mating neighborhood needs at least 2 members");
  }
  const std::size_t first = rng.index(n);
  std::size_t second = rng.index(n - 1);
  if (second >= first) {
    ++second;
  }
  return {neighborhood[first], neighborhood[second]};
}

std::size_t resolve_neighborhood_size(std::size_t configured, std::size_t population) {
  if (configured != 0) {
    return configured;
  }
  return std::min(population, std::max<std::size_t>(2, population / 10));
}

Individual random_individual(const Scenario& scenario, Rng& rng) {
  const std::size_t u = scenario.uav_count();
  const Region& r = scenario.region();
  const PowerBounds& pb = scenario.power_bounds();
  std::vector<double> genes(4 * u);
  for (std::size_t i = 0; i < u; ++i) genes[i] = rng.uniform(r.x_min, r.x_max);
  for (std::size_t i = 0; i < u; ++i) genes[u + i] = rng.uniform(r.y_min, r.y_max);
  for (std::size_t i = 0; i < u; ++i) genes[2 * u + i] = scenario.altitude();
  for (std::size_t i = 0; i < u; ++i) genes[3 * u + i] = rng.uniform(pb.min_w, pb.max_w);
  return Individual(std::move(genes));
}

std::vector<Individual> random_population(const Scenario& scenario, std::size_t count, Rng& rng) {
  std::vector<Individual> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_individual(scenario, rng));
  }
  return out;
}

namespace {

IterationMetrics snapshot(std::size_t iteration, const DecompositionState& state,
                          const ParetoArchive& archive) {
  IterationMetrics m;
  m.iteration = iteration;
  m.ideal = state.ideal;
  m.archive_size = archive.size();
  for (const ObjectiveVector& fv : state.fitness) {
    for (std::size_t k = 0; k < kObjectiveCount; ++k) {
      m.mean[k] += fv[k];
    }
  }
  for (std::size_t k = 0; k < kObjectiveCount; ++k) {
    m.mean[k] /= static_cast<double>(state.fitness.size());
  }
  return m;
}

} // namespace

RunResult run_decomposition(const Scenario& scenario, const MoeadParams& params,
                            const PopulationInitializer& init, const Reproducer& reproduce) {
  DecompositionState state;
  state.weights = generate_weights(params.population_target);
  const std::size_t q = state.weights.size();
  const std::size_t mating = resolve_neighborhood_size(params.mating_size, q);
  const std::size_t replacement = resolve_neighborhood_size(params.replacement_size, q);
  if (mating < 2 || mating > q) {
    throw std::invalid_argument("run: mating neighborhood size must lie in [2, population]");
  }
  if (replacement < 1 || replacement > q) {
    throw std::invalid_argument("run: replacement neighborhood size must lie in [1, population]");
  }
  state.mating_neighborhoods = build_neighborhoods(state.weights, mating);
  state.replacement_neighborhoods = mating == replacement
                                        ? state.mating_neighborhoods
                                        : build_neighborhoods(state.weights, replacement);

  Rng rng(params.seed);
  RunResult result;
  result.archive = ParetoArchive(params.archive_capacity);

  state.population = init(scenario, q, rng);
  if (state.population.size() != q) {
    throw std::logic_error("run: initializer returned the wrong population size");
  }
  state.fitness.reserve(q);
  state.ideal.values.fill(std::numeric_limits<double>::infinity());
  for (Individual& ind : state.population) {
    ind = repair(std::move(ind), scenario);
    const ObjectiveVector fv = evaluate(ind, scenario);
    state.fitness.push_back(fv);
    state.ideal = update_ideal(state.ideal, fv);
    result.archive.insert(ind, fv);
  }
  result.initial_population = state.population;
  result.initial_fitness = state.fitness;
  result.metrics.reserve(params.iterations + 1);
  result.metrics.push_back(snapshot(0, state, result.archive));

  for (std::size_t it = 1; it <= params.iterations; ++it) {
    for (std::size_t i = 0; i < q; ++i) {
      const Individual child = reproduce(state, i, it, rng);
      const ObjectiveVector fv = evaluate(child, scenario);
      state.ideal = update_ideal(state.ideal, fv);
      neighborhood_replace(state, i, child, fv);
      result.archive.insert(child, fv);
    }
    result.metrics.push_back(snapshot(it, state, result.archive));
  }

  result.population = std::move(state.population);
  result.fitness = std::move(state.fitness);
  result.weights = std::move(state.weights);
  return result;
}

RunResult run_moead(const Scenario& scenario, const MoeadParams& params) {
  const PopulationInitializer init = [](const Scenario& s, std::size_t count, Rng& rng) {
    return random_population(s, count, rng);
  };
  const Reproducer reproduce = [&scenario](const DecompositionState& state, std::size_t i,
                                           std::size_t, Rng& rng) {
    const auto parents = select_parents(state.mating_neighborhoods[i], rng);
    return genetic_crossover(state.population[parents[0]], state.population[parents[1]], rng,
                             scenario);
  };
  return run_decomposition(scenario, params, init, reproduce);
}

} // namespace uavvlc
