#pragma once

#include "owrn/model.hpp"

#include <set>
#include <utility>
#include <vector>

namespace owrn {

/// Two cars reaching the same vertex orthogonally at the same exact time.
struct CollisionEvent {
  int car_a;  // 0-based, car_a < car_b
  int car_b;
  VertexId vertex;
  Rational time;

  friend bool operator==(const CollisionEvent&, const CollisionEvent&) = default;
};

// Cars as nodes, an edge per colliding pair.
struct ConflictGraph {
  int node_count = 0;
  std::set<std::pair<int, int>> edges;  // 0-based pairs, first < second

  bool hasEdge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return edges.count({a, b}) > 0;
  }

  friend bool operator==(const ConflictGraph&, const ConflictGraph&) = default;
};

/// All same-vertex same-time orthogonal coincidences across car pairs,
/// sorted by (time, car_a, car_b). Comparison is exact rational equality.
std::vector<CollisionEvent> detectCollisions(const TrafficConfig& tc);

ConflictGraph conflictGraph(const TrafficConfig& tc);

bool isCollisionFree(const TrafficConfig& tc);

/// New configuration keeping only the given cars (0-based, any order).
TrafficConfig restrictTo(const TrafficConfig& tc, const std::vector<int>& cars);

}  // namespace owrn
