#include "uavvlc/cicm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uavvlc {

void CicmParams::validate() const {
  if (!std::isfinite(circle_a) || !std::isfinite(circle_b)) {
    throw std::invalid_argument("CicmParams.circle_a/circle_b: must be finite");
  }
  if (!(mutation_probability >= 0.0 && mutation_probability <= 1.0)) {
    throw std::invalid_argument("CicmParams.mutation_probability: must lie in [0, 1]");
  }
  if (mutation_shape < 1) {
    throw std::invalid_argument("CicmParams.mutation_shape: must be at least 1");
  }
  if (iterations_total < 1) {
    throw std::invalid_argument("CicmParams.iterations_total: must be at least 1");
  }
}

double circle_map_step(double x, const CicmParams& params) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double v = x + params.circle_b - params.circle_a / two_pi * std::sin(two_pi * x);
  const double r = v - std::floor(v);
  return r >= 1.0 ? 0.0 : r;
}

CircleMap::CircleMap(double x0, const CicmParams& params)
    : x_(x0), a_(params.circle_a), b_(params.circle_b) {}

double CircleMap::next() {
  x_ = circle_map_step(x_, CicmParams{.circle_a = a_, .circle_b = b_});
  return x_;
}

std::vector<double> chaos_powers(CircleMap& map, std::size_t count, const PowerBounds& bounds) {
  std::vector<double> out(count);
  for (double& p : out) {
    p = std::clamp(bounds.min_w + map.next() * (bounds.max_w - bounds.min_w), bounds.min_w,
                   bounds.max_w);
  }
  return out;
}

std::vector<double> chaos_init_powers(std::size_t uav_count, const PowerBounds& bounds,
                                      std::uint64_t seed, const CicmParams& params) {
  Rng rng(seed);
  CircleMap map(rng.uniform_open01(), params);
  return chaos_powers(map, uav_count, bounds);
}

std::vector<Individual> chaos_population(const Scenario& scenario, std::size_t count,
                                         const CicmParams& params, Rng& rng) {
  const std::size_t u = scenario.uav_count();
  const Region& r = scenario.region();
  CircleMap map(rng.uniform_open01(), params);
  std::vector<Individual> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<double> genes(4 * u);
    for (std::size_t i = 0; i < u; ++i) genes[i] = rng.uniform(r.x_min, r.x_max);
    for (std::size_t i = 0; i < u; ++i) genes[u + i] = rng.uniform(r.y_min, r.y_max);
    for (std::size_t i = 0; i < u; ++i) genes[2 * u + i] = scenario.altitude();
    const std::vector<double> powers = chaos_powers(map, u, scenario.power_bounds());
    std::copy(powers.begin(), powers.end(), genes.begin() + static_cast<std::ptrdiff_t>(3 * u));
    out.emplace_back(std::move(genes));
  }
  return out;
}

IndividualParts split_individual(const Individual& ind) {
  return {{ind.x().begin(), ind.x().end()},
          {ind.y().begin(), ind.y().end()},
          {ind.z().begin(), ind.z().end()},
          {ind.power().begin(), ind.power().end()}};
}

Individual join_individual(const IndividualParts& parts) {
  return Individual::from_parts(parts.x, parts.y, parts.z, parts.power);
}

double SegmentBounds::clamp(double v) const {
  if (!std::isfinite(v)) {
    return v > 0.0 ? hi : lo;
  }
  return std::clamp(v, lo, hi);
}

std::pair<std::vector<double>, std::vector<double>>
uniform_crossover(std::span<const double> a, std::span<const double> b, SegmentBounds bounds) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("uniform_crossover: segment lengths differ");
  }
  const double threshold = bounds.midpoint();
  std::vector<double> child_a(a.size());
  std::vector<double> child_b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    child_a[i] = bounds.clamp(a[i] <= threshold ? a[i] : b[i]);
    child_b[i] = bounds.clamp(b[i] <= threshold ? b[i] : a[i]);
  }
  return {std::move(child_a), std::move(child_b)};
}

double mutation_beta(double q, std::size_t iteration, const CicmParams& params) {
  const auto it = static_cast<double>(iteration);
  const auto total = static_cast<double>(params.iterations_total);
  const auto n = static_cast<double>(params.mutation_shape);
  const double drift = (it - it / std::sqrt(total)) / std::sqrt(total * n);
  if (q < params.mutation_probability) {
    return std::pow(2.0 * q, 1.0 / (n + 1.0)) - drift;
  }
  return 0.5 * std::pow(1.0 - q, 1.0 / (n + 2.0)) + drift;
}

std::vector<double> mutate_toward(std::span<const double> a, std::span<const double> b,
                                  std::span<const double> steps, SegmentBounds bounds) {
  if (a.size() != b.size() || steps.size() != a.size()) {
    throw std::invalid_argument("mutate_toward: segment lengths differ");
  }
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = bounds.clamp(b[i] - (b[i] - a[i]) * steps[i]);
  }
  return out;
}

std::vector<double> scheduled_mutation(std::span<const double> child_a,
                                       std::span<const double> child_b, SegmentBounds bounds,
                                       std::size_t iteration, const CicmParams& params, Rng& rng) {
  const double beta = mutation_beta(rng.uniform01(), iteration, params);
  std::vector<double> steps(child_a.size());
  for (double& s : steps) {
    s = rng.uniform01() * beta;
  }
  return mutate_toward(child_a, child_b, steps, bounds);
}

Individual cicm_reproduce(const DecompositionState& state, std::size_t subproblem,
                          std::size_t iteration, const Scenario& scenario,
                          const CicmParams& params, Rng& rng) {
  const auto parents = select_parents(state.mating_neighborhoods.at(subproblem), rng);
  const IndividualParts a = split_individual(state.population[parents[0]]);
  const IndividualParts b = split_individual(state.population[parents[1]]);

  const Region& r = scenario.region();
  const SegmentBounds x_bounds{r.x_min, r.x_max};
  const SegmentBounds y_bounds{r.y_min, r.y_max};
  const SegmentBounds p_bounds{scenario.power_bounds().min_w, scenario.power_bounds().max_w};

  const auto evolve = [&](const std::vector<double>& sa, const std::vector<double>& sb,
                          SegmentBounds bounds) {
    const auto [ca, cb] = uniform_crossover(sa, sb, bounds);
    return scheduled_mutation(ca, cb, bounds, iteration, params, rng);
  };

  IndividualParts child;
  child.x = evolve(a.x, b.x, x_bounds);
  child.y = evolve(a.y, b.y, y_bounds);
  child.z = a.z;
  child.power = evolve(a.power, b.power, p_bounds);
  return repair(join_individual(child), scenario);
}

RunResult run_moead_cicm(const Scenario& scenario, const MoeadParams& params,
                         const CicmParams& cicm) {
  CicmParams schedule = cicm;
  schedule.iterations_total = std::max<std::size_t>(1, params.iterations);
  schedule.validate();
  const PopulationInitializer init = [schedule](const Scenario& s, std::size_t count, Rng& rng) {
    return chaos_population(s, count, schedule, rng);
  };
  const Reproducer reproduce = [&scenario, schedule](const DecompositionState& state,
                                                     std::size_t i, std::size_t it, Rng& rng) {
    return cicm_reproduce(state, i, it, scenario, schedule, rng);
  };
  return run_decomposition(scenario, params, init, reproduce);
}

} // namespace uavvlc
