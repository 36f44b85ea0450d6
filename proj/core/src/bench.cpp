#include "uavvlc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "uavvlc/hypervolume.hpp"

namespace uavvlc {

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
  case Algorithm::Moead: return "moead";
  case Algorithm::MoeadCicm: return "moead-cicm";
  case Algorithm::Random: return "random";
  case Algorithm::Uniform: return "uniform";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Moead, Algorithm::MoeadCicm, Algorithm::Random,
                      Algorithm::Uniform}) {
    if (algorithm_name(a) == name) {
      return a;
    }
  }
  return std::nullopt;
}

Individual random_deployment(const Scenario& scenario, std::uint64_t seed) {
  Rng rng(seed);
  return random_individual(scenario, rng);
}

Individual uniform_deployment(const Scenario& scenario) {
  const std::size_t u = scenario.uav_count();
  const auto rows = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(u))));
  const std::size_t cols = (u + rows - 1) / rows;
  const Region& r = scenario.region();
  const double cw = r.width() / static_cast<double>(cols);
  const double ch = r.height() / static_cast<double>(rows);
  const PowerBounds& pb = scenario.power_bounds();
  const double mid_power = 0.5 * (pb.min_w + pb.max_w);

  std::vector<double> genes(4 * u);
  for (std::size_t k = 0; k < u; ++k) {
    const std::size_t row = k / cols;
    const std::size_t col = k % cols;
    genes[k] = r.x_min + cw * (static_cast<double>(col) + 0.5);
    genes[u + k] = r.y_min + ch * (static_cast<double>(row) + 0.5);
    genes[2 * u + k] = scenario.altitude();
    genes[3 * u + k] = mid_power;
  }
  return Individual(std::move(genes));
}

PowerGrid power_grid(const Individual& ind, const Scenario& scenario) {
  PowerGrid grid;
  const GridShape shape = scenario.grid();
  grid.nx = shape.nx;
  grid.ny = shape.ny;
  grid.origin_x = scenario.region().x_min;
  grid.origin_y = scenario.region().y_min;
  grid.cell_width = scenario.region().width() / static_cast<double>(shape.nx);
  grid.cell_height = scenario.region().height() / static_cast<double>(shape.ny);
  grid.points.assign(scenario.receivers().begin(), scenario.receivers().end());
  grid.values = received_powers(ind, scenario);
  return grid;
}

double high_quality_area(const PowerGrid& grid, AreaThreshold threshold) {
  if (grid.values.empty()) {
    return 0.0;
  }
  double tau = threshold.watts;
  if (threshold.policy == AreaThreshold::Policy::GridMean) {
    // Offsetting by the minimum keeps the mean of a constant grid exact.
    const double lo = *std::min_element(grid.values.begin(), grid.values.end());
    double excess = 0.0;
    for (double v : grid.values) {
      excess += v - lo;
    }
    tau = lo + excess / static_cast<double>(grid.values.size());
  }
  const auto qualifying = std::count_if(grid.values.begin(), grid.values.end(),
                                        [tau](double v) { return v >= tau; });
  return grid.cell_area() * static_cast<double>(qualifying);
}

Normalization Normalization::fit(std::span<const ObjectiveVector> points) {
  Normalization n;
  n.lo.values.fill(std::numeric_limits<double>::infinity());
  n.hi.values.fill(-std::numeric_limits<double>::infinity());
  for (const ObjectiveVector& p : points) {
    for (std::size_t k = 0; k < kObjectiveCount; ++k) {
      n.lo[k] = std::min(n.lo[k], p[k]);
      n.hi[k] = std::max(n.hi[k], p[k]);
    }
  }
  if (points.empty()) {
    n.lo = {};
    n.hi.values.fill(1.0);
  }
  return n;
}

ObjectiveVector Normalization::apply(const ObjectiveVector& v) const {
  ObjectiveVector out;
  for (std::size_t k = 0; k < kObjectiveCount; ++k) {
    const double span = hi[k] - lo[k];
    out[k] = span > 0.0 ? (v[k] - lo[k]) / span : v[k] - lo[k];
  }
  return out;
}

std::size_t knee_index(std::span<const ObjectiveVector> objectives,
                       const Normalization& normalization,
                       const ObjectiveVector& normalized_ideal) {
  if (objectives.empty()) {
    throw std::invalid_argument("knee_index: empty archive");
  }
  const WeightVector equal{{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}};
  std::size_t best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < objectives.size(); ++i) {
    const double g = tchebycheff(normalization.apply(objectives[i]), equal, normalized_ideal);
    if (g < best_value) {
      best_value = g;
      best = i;
    }
  }
  return best;
}

const RunReport* ExperimentResult::find(Algorithm algorithm, std::uint64_t seed) const {
  for (const RunReport& r : runs) {
    if (r.algorithm == algorithm && r.seed == seed) {
      return &r;
    }
  }
  return nullptr;
}

namespace {

RunReport execute(const Scenario& scenario, Algorithm algorithm, std::uint64_t seed,
                  const ExperimentBudget& budget) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  report.algorithm = algorithm;
  report.seed = seed;
  report.archive = ParetoArchive(budget.moead.archive_capacity);
  const auto single = [&](Individual ind) {
    const ObjectiveVector fv = evaluate(ind, scenario);
    report.archive.insert(ind, fv);
    report.initial_population = {ind};
    report.initial_fitness = {fv};
  };
  switch (algorithm) {
  case Algorithm::Moead:
  case Algorithm::MoeadCicm: {
    MoeadParams params = budget.moead;
    params.seed = seed;
    RunResult run = algorithm == Algorithm::Moead
                        ? run_moead(scenario, params)
                        : run_moead_cicm(scenario, params, budget.cicm);
    report.archive = std::move(run.archive);
    report.metrics = std::move(run.metrics);
    report.initial_population = std::move(run.initial_population);
    report.initial_fitness = std::move(run.initial_fitness);
    break;
  }
  case Algorithm::Random:
    single(random_deployment(scenario, seed));
    break;
  case Algorithm::Uniform:
    single(uniform_deployment(scenario));
    break;
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

// Sums in sorted order so the mean does not depend on seed order.
double order_free_mean(std::vector<double> values) {
  if (values.empty()) {
    return 0.0;
  }
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) {
    sum += v;
  }
  return sum / static_cast<double>(values.size());
}

} // namespace

ExperimentResult run_experiment(const Scenario& scenario, std::span<const Algorithm> algorithms,
                                std::span<const std::uint64_t> seeds,
                                const ExperimentBudget& budget, std::size_t jobs) {
  ExperimentResult result;
  const std::size_t total = algorithms.size() * seeds.size();
  if (total == 0) {
    return result;
  }

  std::vector<std::optional<RunReport>> slots(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      try {
        slots[k] = execute(scenario, algorithms[k / seeds.size()], seeds[k % seeds.size()],
                           budget);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, total);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  result.runs.reserve(total);
  for (auto& slot : slots) {
    result.runs.push_back(std::move(*slot));
  }

  std::vector<ObjectiveVector> finals;
  ObjectiveVector initial_max;
  initial_max.values.fill(-std::numeric_limits<double>::infinity());
  for (const RunReport& r : result.runs) {
    for (const auto& e : r.archive.entries()) {
      finals.push_back(e.objectives);
    }
    for (const ObjectiveVector& fv : r.initial_fitness) {
      for (std::size_t k = 0; k < kObjectiveCount; ++k) {
        initial_max[k] = std::max(initial_max[k], fv[k]);
      }
    }
  }
  result.normalization = Normalization::fit(finals);
  ObjectiveVector raw_reference;
  for (std::size_t k = 0; k < kObjectiveCount; ++k) {
    raw_reference[k] = 1.1 * initial_max[k];
  }
  result.hv_reference = result.normalization.apply(raw_reference);
  const ObjectiveVector joint_ideal = result.normalization.apply(result.normalization.lo);

  for (RunReport& r : result.runs) {
    const std::vector<ObjectiveVector> objs = r.archive.objectives();
    const std::size_t knee = knee_index(objs, result.normalization, joint_ideal);
    r.knee = objs[knee];
    r.knee_solution = r.archive.entries()[knee].solution;
    r.grid = power_grid(r.knee_solution, scenario);
    r.area_m2 = high_quality_area(r.grid, budget.area_threshold);

    std::vector<ObjectiveVector> inside;
    for (const ObjectiveVector& v : objs) {
      const ObjectiveVector n = result.normalization.apply(v);
      bool ok = true;
      for (std::size_t k = 0; k < kObjectiveCount; ++k) {
        ok = ok && n[k] <= result.hv_reference[k];
      }
      if (ok) {
        inside.push_back(n);
      }
    }
    r.hypervolume = hypervolume(inside, result.hv_reference);
  }

  for (Algorithm a : algorithms) {
    SummaryRow row;
    row.algorithm = a;
    std::vector<double> area;
    std::vector<double> hv;
    std::array<std::vector<double>, kObjectiveCount> knees;
    for (const RunReport& r : result.runs) {
      if (r.algorithm != a) {
        continue;
      }
      ++row.runs;
      area.push_back(r.area_m2);
      hv.push_back(r.hypervolume);
      for (std::size_t k = 0; k < kObjectiveCount; ++k) {
        knees[k].push_back(r.knee[k]);
      }
    }
    for (std::size_t k = 0; k < kObjectiveCount; ++k) {
      row.mean_knee[k] = order_free_mean(std::move(knees[k]));
    }
    row.mean_area_m2 = order_free_mean(std::move(area));
    row.mean_hypervolume = order_free_mean(std::move(hv));
    result.summary.push_back(row);
  }
  return result;
}

} // namespace uavvlc
