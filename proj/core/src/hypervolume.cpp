#include "uavvlc/hypervolume.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <vector>

namespace uavvlc {

namespace {

struct Point2 {
  double x;
  double y;
};

// Area of the union of [x, rx] x [y, ry] over a front sorted by x.
double staircase_area(const std::vector<Point2>& sorted, double rx, double ry) {
  double area = 0.0;
  double floor_y = ry;
  for (const Point2& p : sorted) {
    if (p.y < floor_y) {
      area += (rx - p.x) * (floor_y - p.y);
      floor_y = p.y;
    }
  }
  return area;
}

} // namespace

double hypervolume(std::span<const ObjectiveVector> points, const ObjectiveVector& reference) {
  for (const ObjectiveVector& p : points) {
    for (std::size_t k = 0; k < kObjectiveCount; ++k) {
      if (!(p[k] <= reference[k])) {
        throw std::invalid_argument("hypervolume: point does not dominate the reference point");
      }
    }
  }
  std::vector<ObjectiveVector> by_f3(points.begin(), points.end());
  std::sort(by_f3.begin(), by_f3.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
    return a[2] < b[2] || (a[2] == b[2] && (a[0] < b[0] || (a[0] == b[0] && a[1] < b[1])));
  });

  // The active set is a 2-D front sorted by ascending x (so descending y).
  // A slab is closed only when a point changes the front, which makes
  // dominated points exact no-ops.
  std::vector<Point2> front;
  front.reserve(by_f3.size());
  double volume = 0.0;
  double area = 0.0;
  double slab_start = 0.0;
  for (const ObjectiveVector& v : by_f3) {
    const Point2 p{v[0], v[1]};
    auto pos = std::lower_bound(front.begin(), front.end(), p,
                                [](const Point2& a, const Point2& b) { return a.x < b.x; });
    const bool covered = (pos != front.end() && pos->x == p.x && pos->y <= p.y) ||
                         (pos != front.begin() && std::prev(pos)->y <= p.y);
    if (covered) {
      continue;
    }
    if (!front.empty()) {
      volume += area * (v[2] - slab_start);
    }
    auto last = pos;
    while (last != front.end() && last->y >= p.y) {
      ++last;
    }
    pos = front.erase(pos, last);
    front.insert(pos, p);
    area = staircase_area(front, reference[0], reference[1]);
    slab_start = v[2];
  }
  if (!front.empty()) {
    volume += area * (reference[2] - slab_start);
  }
  return volume;
}

double hypervolume(const ParetoArchive& archive, const ObjectiveVector& reference) {
  const std::vector<ObjectiveVector> pts = archive.objectives();
  return hypervolume(pts, reference);
}

} // namespace uavvlc
