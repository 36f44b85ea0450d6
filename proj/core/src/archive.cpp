#include "uavvlc/archive.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace uavvlc {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  bool strictly = false;
  for (std::size_t i = 0; i < kObjectiveCount; ++i) {
    if (a[i] > b[i]) {
      return false;
    }
    if (a[i] < b[i]) {
      strictly = true;
    }
  }
  return strictly;
}

ParetoArchive::ParetoArchive(std::size_t capacity) : capacity_(capacity) {
  if (capacity_ == 0) {
    throw std::invalid_argument("ParetoArchive: capacity must be positive");
  }
}

bool ParetoArchive::insert(const Individual& solution, const ObjectiveVector& objectives) {
  for (const Entry& e : entries_) {
    if (e.objectives == objectives || dominates(e.objectives, objectives)) {
      return false;
    }
  }
  std::erase_if(entries_, [&](const Entry& e) { return dominates(objectives, e.objectives); });
  entries_.push_back({solution, objectives});
  if (entries_.size() > capacity_) {
    truncate();
  }
  return true;
}

std::vector<ObjectiveVector> ParetoArchive::objectives() const {
  std::vector<ObjectiveVector> out;
  out.reserve(entries_.size());
  for (const Entry& e : entries_) {
    out.push_back(e.objectives);
  }
  return out;
}

void ParetoArchive::truncate() {
  while (entries_.size() > capacity_) {
    const std::size_t n = entries_.size();
    std::vector<std::array<double, kObjectiveCount>> scaled(n);
    for (std::size_t k = 0; k < kObjectiveCount; ++k) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -std::numeric_limits<double>::infinity();
      for (const Entry& e : entries_) {
        lo = std::min(lo, e.objectives[k]);
        hi = std::max(hi, e.objectives[k]);
      }
      const double span = hi - lo;
      for (std::size_t i = 0; i < n; ++i) {
        scaled[i][k] = span > 0.0 ? (entries_[i].objectives[k] - lo) / span : 0.0;
      }
    }
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double d2 = 0.0;
        for (std::size_t k = 0; k < kObjectiveCount; ++k) {
          const double d = scaled[i][k] - scaled[j][k];
          d2 += d * d;
        }
        nearest[i] = std::min(nearest[i], d2);
        nearest[j] = std::min(nearest[j], d2);
      }
    }
    const auto victim = std::min_element(nearest.begin(), nearest.end()) - nearest.begin();
    entries_.erase(entries_.begin() + victim);
  }
}

} // namespace uavvlc
