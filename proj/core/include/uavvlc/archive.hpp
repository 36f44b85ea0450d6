#pragma once

#include <cstddef>
#include <vector>

#include "uavvlc/problem.hpp"

namespace uavvlc {

/// Strict Pareto dominance for minimisation: a <= b everywhere and a < b somewhere.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Bounded set of mutually nondominated solutions.
///
/// When an insertion pushes the size past capacity, the entry with the
/// smallest nearest-neighbour distance in min-max normalised objective space
/// is dropped (lowest index on ties).
class ParetoArchive {
public:
  struct Entry {
    Individual solution;
    ObjectiveVector objectives;
  };

  explicit ParetoArchive(std::size_t capacity = 500);

  /// Returns true if the candidate was kept. Candidates that are dominated
  /// by, or objective-equal to, an existing entry are rejected.
  bool insert(const Individual& solution, const ObjectiveVector& objectives);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t capacity() const { return capacity_; }

  std::vector<ObjectiveVector> objectives() const;

private:
  void truncate();

  std::size_t capacity_;
  std::vector<Entry> entries_;
};

} // namespace uavvlc
