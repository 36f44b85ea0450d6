#pragma once

#include "uavvlc/config.hpp"

namespace uavvlc::bench_support {

inline Scenario case_scenario(int case_number, std::size_t grid) {
  RunConfig config;
  apply_case_preset(config, case_number);
  config.scenario.grid_per_side = grid;
  return build_scenario(config);
}

} // namespace uavvlc::bench_support
