#include "owrn/collision.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace owrn {

namespace {

struct EntryKey {
  VertexId vertex;
  Rational time;

  friend bool operator==(const EntryKey&, const EntryKey&) = default;
};

struct EntryKeyHash {
  std::size_t operator()(const EntryKey& k) const {
    return std::hash<VertexId>()(k.vertex) * 1000003u ^ k.time.hash();
  }
};

using ScheduleMap = std::unordered_map<EntryKey, Axis, EntryKeyHash>;

}  // namespace

std::vector<CollisionEvent> detectCollisions(const TrafficConfig& tc) {
  const int k = tc.carCount();
  std::vector<std::vector<ScheduleEntry>> schedules;
  schedules.reserve(static_cast<std::size_t>(k));
  std::vector<ScheduleMap> maps(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) {
    schedules.push_back(arrivalSchedule(tc.network, tc.vehicles[static_cast<std::size_t>(c)]));
    ScheduleMap& map = maps[static_cast<std::size_t>(c)];
    map.reserve(schedules.back().size() * 2);
    for (const ScheduleEntry& e : schedules.back()) map.emplace(EntryKey{e.vertex, e.time}, e.axis);
  }

  // Hash-join each pair on (vertex, time): probe the shorter schedule
  // against the other car's map.
  std::vector<CollisionEvent> events;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      int probe = a;
      int build = b;
      if (schedules[static_cast<std::size_t>(b)].size() <
          schedules[static_cast<std::size_t>(a)].size()) {
        probe = b;
        build = a;
      }
      const ScheduleMap& map = maps[static_cast<std::size_t>(build)];
      for (const ScheduleEntry& e : schedules[static_cast<std::size_t>(probe)]) {
        auto it = map.find(EntryKey{e.vertex, e.time});
        if (it != map.end() && it->second != e.axis) {
          events.push_back({a, b, e.vertex, e.time});
        }
      }
    }
  }
  std::sort(events.begin(), events.end(), [](const CollisionEvent& x, const CollisionEvent& y) {
    if (x.time != y.time) return x.time < y.time;
    if (x.car_a != y.car_a) return x.car_a < y.car_a;
    if (x.car_b != y.car_b) return x.car_b < y.car_b;
    return x.vertex < y.vertex;
  });
  return events;
}

ConflictGraph conflictGraph(const TrafficConfig& tc) {
  ConflictGraph g;
  g.node_count = tc.carCount();
  for (const CollisionEvent& e : detectCollisions(tc)) g.edges.insert({e.car_a, e.car_b});
  return g;
}

bool isCollisionFree(const TrafficConfig& tc) { return detectCollisions(tc).empty(); }

TrafficConfig restrictTo(const TrafficConfig& tc, const std::vector<int>& cars) {
  std::vector<Vehicle> kept;
  kept.reserve(cars.size());
  for (int c : cars) {
    if (c < 0 || c >= tc.carCount()) {
      throw Error(ErrorCode::SemanticError, "car index out of range: " + std::to_string(c));
    }
    kept.push_back(tc.vehicles[static_cast<std::size_t>(c)]);
  }
  return TrafficConfig{tc.network, std::move(kept)};
}

}  // namespace owrn
