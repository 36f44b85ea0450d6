#pragma once

#include <vector>

#include "uavvlc/problem.hpp"

namespace testing_support {

// 2 UAVs over a 4 x 4 m square, a 4 x 4 receiver lattice, fixed starts.
inline uavvlc::ScenarioDescription micro_description() {
  uavvlc::ScenarioDescription d;
  d.region = {0.0, 4.0, 0.0, 4.0};
  d.altitude = 8.0;
  d.uav_count = 2;
  d.receivers = uavvlc::make_receiver_grid(d.region, 4);
  d.grid = {4, 4};
  d.eavesdropper = {3.0, 3.0, 0.0};
  d.start_positions = {{0.5, 0.5, 8.0}, {3.5, 1.0, 8.0}};
  return d;
}

inline uavvlc::Scenario micro_scenario() { return uavvlc::Scenario(micro_description()); }

inline uavvlc::Scenario square_scenario(double side, std::size_t uavs, std::size_t grid) {
  uavvlc::ScenarioDescription d;
  d.region = {0.0, side, 0.0, side};
  d.uav_count = uavs;
  d.receivers = uavvlc::make_receiver_grid(d.region, grid);
  d.grid = {grid, grid};
  d.eavesdropper = {0.75 * side, 0.75 * side, 0.0};
  for (std::size_t i = 0; i < uavs; ++i) {
    d.start_positions.push_back({side * (static_cast<double>(i) + 0.5) / static_cast<double>(uavs),
                                 0.25 * side, d.altitude});
  }
  return uavvlc::Scenario(std::move(d));
}

} // namespace testing_support
