#pragma once

#include <span>

#include "uavvlc/archive.hpp"

namespace uavvlc {

/// Exact volume of the union of boxes [p, reference] for three objectives,
/// by slicing along f3 and sweeping the 2-D staircase in each slab.
/// Throws std::invalid_argument if some point exceeds the reference in any
/// component.
double hypervolume(std::span<const ObjectiveVector> points, const ObjectiveVector& reference);

double hypervolume(const ParetoArchive& archive, const ObjectiveVector& reference);

} // namespace uavvlc
