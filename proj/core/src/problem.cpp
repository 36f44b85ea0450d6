#include "uavvlc/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace uavvlc {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) {
    throw std::invalid_argument("Scenario: " + message);
  }
}

double clamp_finite(double v, double lo, double hi) {
  if (!std::isfinite(v)) {
    return v > 0.0 ? hi : lo;
  }
  return std::clamp(v, lo, hi);
}

} // namespace

Scenario::Scenario(ScenarioDescription description)
    : d_(std::move(description)), kernel_((d_.vlc.validate(), d_.vlc)) {
  d_.rotor.validate();
  const Region& r = d_.region;
  require(std::isfinite(r.x_min) && std::isfinite(r.x_max) && r.x_min < r.x_max,
          "region x bounds must be finite with x_min < x_max");
  require(std::isfinite(r.y_min) && std::isfinite(r.y_max) && r.y_min < r.y_max,
          "region y bounds must be finite with y_min < y_max");
  require(d_.altitude > 0.0 && std::isfinite(d_.altitude), "altitude must be positive");
  require(d_.uav_count >= 1, "uav_count must be at least 1");
  require(!d_.receivers.empty(), "receiver grid must not be empty");
  for (const Position3& p : d_.receivers) {
    require(p.z == 0.0, "receivers must lie on the ground (z = 0)");
    require(r.contains(p.x, p.y), "receivers must lie within the region");
  }
  if (d_.grid.nx * d_.grid.ny != d_.receivers.size()) {
    d_.grid = {d_.receivers.size(), 1};
  }
  require(d_.eavesdropper.z == 0.0, "eavesdropper must lie on the ground (z = 0)");
  require(std::isfinite(d_.eavesdropper.x) && std::isfinite(d_.eavesdropper.y),
          "eavesdropper coordinates must be finite");
  require(d_.start_positions.size() == d_.uav_count,
          "start_positions length must equal uav_count");
  for (const Position3& p : d_.start_positions) {
    require(p.z == d_.altitude, "start positions must be at the operating altitude");
    require(std::isfinite(p.x) && std::isfinite(p.y), "start positions must be finite");
  }
  const PowerBounds& pb = d_.power_bounds;
  require(pb.min_w > 0.0, "power_bounds: P_min must be positive");
  require(pb.min_w < pb.max_w && std::isfinite(pb.max_w), "power_bounds: P_min must be below P_max");
  require(d_.cruise_speed > 0.0 && std::isfinite(d_.cruise_speed), "cruise_speed must be positive");
}

Individual::Individual(std::vector<double> genes) : genes_(std::move(genes)) {
  if (genes_.size() % 4 != 0) {
    throw std::invalid_argument("Individual: gene count must be a multiple of 4");
  }
}

Individual Individual::from_parts(std::span<const double> x, std::span<const double> y,
                                  std::span<const double> z,
                                  std::span<const double> power) {
  if (y.size() != x.size() || z.size() != x.size() || power.size() != x.size()) {
    throw std::invalid_argument("Individual::from_parts: segment lengths differ");
  }
  std::vector<double> genes;
  genes.reserve(4 * x.size());
  genes.insert(genes.end(), x.begin(), x.end());
  genes.insert(genes.end(), y.begin(), y.end());
  genes.insert(genes.end(), z.begin(), z.end());
  genes.insert(genes.end(), power.begin(), power.end());
  return Individual(std::move(genes));
}

Position3 Individual::hover_position(std::size_t uav) const {
  return {x()[uav], y()[uav], z()[uav]};
}

std::vector<Transmitter> transmitters(const Individual& ind) {
  std::vector<Transmitter> out;
  out.reserve(ind.uav_count());
  for (std::size_t i = 0; i < ind.uav_count(); ++i) {
    out.push_back({ind.hover_position(i), ind.power()[i], 1.0});
  }
  return out;
}

std::vector<double> received_powers(const Individual& ind, const Scenario& scenario) {
  const ChannelKernel& kernel = scenario.kernel();
  const auto xs = ind.x();
  const auto ys = ind.y();
  const auto zs = ind.z();
  const auto ps = ind.power();
  std::vector<double> out;
  out.reserve(scenario.receivers().size());
  for (const Position3& rx : scenario.receivers()) {
    double total = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      total += kernel.gain(xs[i] - rx.x, ys[i] - rx.y, zs[i] - rx.z) * ps[i];
    }
    out.push_back(total);
  }
  return out;
}

double average_received_power(const Individual& ind, const Scenario& scenario) {
  const std::vector<double> powers = received_powers(ind, scenario);
  double sum = 0.0;
  for (double p : powers) {
    sum += p;
  }
  return sum / static_cast<double>(powers.size());
}

double power_variance(std::span<const double> powers) {
  if (powers.empty()) {
    return 0.0;
  }
  // Shifted by the first sample so a constant field gives exactly zero.
  const double shift = powers.front();
  const auto n = static_cast<double>(powers.size());
  double mean = 0.0;
  for (double p : powers) {
    mean += p - shift;
  }
  mean /= n;
  double acc = 0.0;
  for (double p : powers) {
    const double d = (p - shift) - mean;
    acc += d * d;
  }
  return acc / n;
}

double objective_uniformity(const Individual& ind, const Scenario& scenario) {
  const std::vector<double> powers = received_powers(ind, scenario);
  return kUniformityReportScale * power_variance(powers);
}

double objective_leakage(const Individual& ind, const Scenario& scenario) {
  const ChannelKernel& kernel = scenario.kernel();
  const Position3& eve = scenario.eavesdropper();
  const std::size_t u = ind.uav_count();
  std::vector<double> amplitude_sq(u);
  for (std::size_t r = 0; r < u; ++r) {
    const Position3 p = ind.hover_position(r);
    const double a = ind.power()[r] * kernel.gain(p.x - eve.x, p.y - eve.y, p.z - eve.z);
    amplitude_sq[r] = a * a;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < u; ++i) {
    if (amplitude_sq[i] == 0.0) {
      continue;
    }
    double interference = 0.0;
    for (std::size_t r = 0; r < u; ++r) {
      if (r != i) {
        interference += amplitude_sq[r];
      }
    }
    total += rate_from_terms(amplitude_sq[i], interference, scenario.vlc().noise_std);
  }
  return total;
}

double objective_energy(const Individual& ind, const Scenario& scenario) {
  double total = 0.0;
  const auto starts = scenario.start_positions();
  for (std::size_t i = 0; i < ind.uav_count(); ++i) {
    total += motion_energy(starts[i], ind.hover_position(i), scenario.cruise_speed(),
                           scenario.rotor());
  }
  return total;
}

ObjectiveVector evaluate(const Individual& ind, const Scenario& scenario) {
  if (!is_feasible(ind, scenario)) {
    throw std::invalid_argument("evaluate: individual violates the box constraints");
  }
  return {{objective_uniformity(ind, scenario), objective_leakage(ind, scenario),
           objective_energy(ind, scenario)}};
}

bool is_feasible(const Individual& ind, const Scenario& scenario) {
  if (ind.uav_count() != scenario.uav_count() ||
      ind.genes().size() != scenario.gene_count()) {
    return false;
  }
  const Region& r = scenario.region();
  const PowerBounds& pb = scenario.power_bounds();
  for (std::size_t i = 0; i < ind.uav_count(); ++i) {
    if (!(ind.x()[i] >= r.x_min && ind.x()[i] <= r.x_max)) return false;
    if (!(ind.y()[i] >= r.y_min && ind.y()[i] <= r.y_max)) return false;
    if (ind.z()[i] != scenario.altitude()) return false;
    if (!(ind.power()[i] >= pb.min_w && ind.power()[i] <= pb.max_w)) return false;
  }
  return true;
}

Individual repair(Individual ind, const Scenario& scenario) {
  if (ind.genes().size() != scenario.gene_count()) {
    throw std::invalid_argument("repair: expected " + std::to_string(scenario.gene_count()) +
                                " genes, got " + std::to_string(ind.genes().size()));
  }
  const std::size_t u = scenario.uav_count();
  const Region& r = scenario.region();
  const PowerBounds& pb = scenario.power_bounds();
  std::span<double> g = ind.genes();
  for (std::size_t i = 0; i < u; ++i) {
    g[i] = clamp_finite(g[i], r.x_min, r.x_max);
    g[u + i] = clamp_finite(g[u + i], r.y_min, r.y_max);
    g[2 * u + i] = scenario.altitude();
    g[3 * u + i] = clamp_finite(g[3 * u + i], pb.min_w, pb.max_w);
  }
  return ind;
}

std::vector<Position3> make_receiver_grid(const Region& region, std::size_t n_per_side) {
  if (n_per_side < 2) {
    throw std::invalid_argument("make_receiver_grid: need at least 2 points per side");
  }
  const double step_x = region.width() / static_cast<double>(n_per_side - 1);
  const double step_y = region.height() / static_cast<double>(n_per_side - 1);
  std::vector<Position3> out;
  out.reserve(n_per_side * n_per_side);
  for (std::size_t iy = 0; iy < n_per_side; ++iy) {
    // Pin the last row/column to the bound so the lattice stays inside the region.
    const double y = iy + 1 == n_per_side ? region.y_max
                                          : region.y_min + step_y * static_cast<double>(iy);
    for (std::size_t ix = 0; ix < n_per_side; ++ix) {
      const double x = ix + 1 == n_per_side ? region.x_max
                                            : region.x_min + step_x * static_cast<double>(ix);
      out.push_back({x, y, 0.0});
    }
  }
  return out;
}

} // namespace uavvlc
