#pragma once

#include "owrn/collision.hpp"
#include "owrn/connectivity.hpp"
#include "owrn/model.hpp"
#include "owrn/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <random>
#include <vector>

namespace owrn::testing {

// 2x2 unit grid with a counter-clockwise boundary cycle.
inline Owrn fixA() {
  return validateOwrn({{Axis::Horizontal, 1, 0}, {Axis::Horizontal, 0, 1}},
                      {{Axis::Vertical, 0, 0}, {Axis::Vertical, 1, 1}});
}

// 3x3 unit grid, counter-clockwise boundary, interior d(X_2)=1, d(Y_2)=0.
inline Owrn fixB() {
  return validateOwrn(
      {{Axis::Horizontal, 1, 0}, {Axis::Horizontal, 1, 1}, {Axis::Horizontal, 0, 2}},
      {{Axis::Vertical, 0, 0}, {Axis::Vertical, 0, 1}, {Axis::Vertical, 1, 2}});
}

// Complete-graph gadget for n=3 with unit spacing and unit speed.
inline TrafficConfig fixK3() { return completeGraphTC(3, ReductionParams{1, Rational(1)}); }

inline Owrn makeGrid(int n, int m, const std::vector<int>& hdirs, const std::vector<int>& vdirs,
                     long long spacing = 1) {
  std::vector<Road> horizontal;
  std::vector<Road> vertical;
  for (int i = 0; i < n; ++i) horizontal.push_back({Axis::Horizontal, hdirs[static_cast<std::size_t>(i)], i * spacing});
  for (int j = 0; j < m; ++j) vertical.push_back({Axis::Vertical, vdirs[static_cast<std::size_t>(j)], j * spacing});
  return validateOwrn(std::move(horizontal), std::move(vertical));
}

// Random grid. With forceBoundaryCycle the boundary tuple is one of the two
// cycle orientations, so the result is strongly connected.
inline Owrn randomOwrn(std::mt19937& rng, int n, int m, bool forceBoundaryCycle,
                       bool uniformSpacing = true) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<int> hdirs(static_cast<std::size_t>(n));
  std::vector<int> vdirs(static_cast<std::size_t>(m));
  for (auto& d : hdirs) d = bit(rng);
  for (auto& d : vdirs) d = bit(rng);
  if (forceBoundaryCycle) {
    const bool ccw = bit(rng) == 0;
    hdirs.front() = ccw ? 1 : 0;
    hdirs.back() = ccw ? 0 : 1;
    vdirs.front() = ccw ? 0 : 1;
    vdirs.back() = ccw ? 1 : 0;
  }
  if (uniformSpacing) return makeGrid(n, m, hdirs, vdirs);
  std::uniform_int_distribution<long long> gap(1, 4);
  std::vector<Road> horizontal;
  std::vector<Road> vertical;
  long long off = 0;
  for (int i = 0; i < n; ++i, off += gap(rng)) {
    horizontal.push_back({Axis::Horizontal, hdirs[static_cast<std::size_t>(i)], off});
  }
  off = 0;
  for (int j = 0; j < m; ++j, off += gap(rng)) {
    vertical.push_back({Axis::Vertical, vdirs[static_cast<std::size_t>(j)], off});
  }
  return validateOwrn(std::move(horizontal), std::move(vertical));
}

inline std::vector<VertexId> outNeighborsOf(const Owrn& net, VertexId u) {
  std::vector<VertexId> out;
  for (const VertexId cand : {VertexId{u.i, u.j - 1}, VertexId{u.i, u.j + 1},
                              VertexId{u.i - 1, u.j}, VertexId{u.i + 1, u.j}}) {
    if (net.inRange(cand) && hasDirectedEdge(net, u, cand)) out.push_back(cand);
  }
  return out;
}

inline bool bfsReaches(const Owrn& net, VertexId from, VertexId to) {
  std::vector<char> seen(static_cast<std::size_t>(net.rows()) * net.cols(), 0);
  auto idx = [&net](VertexId v) {
    return static_cast<std::size_t>(v.i - 1) * net.cols() + (v.j - 1);
  };
  std::queue<VertexId> queue;
  queue.push(from);
  seen[idx(from)] = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    if (v == to) return true;
    for (const VertexId w : outNeighborsOf(net, v)) {
      if (!seen[idx(w)]) {
        seen[idx(w)] = 1;
        queue.push(w);
      }
    }
  }
  return false;
}

// Direction-respecting random walk of at least one edge; empty when the
// start vertex is a dead end.
inline PathSeq randomWalk(std::mt19937& rng, const Owrn& net, int maxEdges) {
  std::uniform_int_distribution<int> row(1, net.rows());
  std::uniform_int_distribution<int> col(1, net.cols());
  PathSeq path{VertexId{row(rng), col(rng)}};
  for (int step = 0; step < maxEdges; ++step) {
    const auto options = outNeighborsOf(net, path.back());
    if (options.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    path.push_back(options[pick(rng)]);
  }
  if (path.size() < 2) return {};
  return path;
}

inline TrafficConfig randomTC(std::mt19937& rng, int cars, int gridRows = 3, int gridCols = 3) {
  const Owrn net = randomOwrn(rng, gridRows, gridCols, true);
  std::uniform_int_distribution<int> startNum(0, 3);
  std::uniform_int_distribution<int> speedPick(0, 3);
  const Rational speeds[4] = {Rational(1), Rational(1), Rational(1, 2), Rational(2)};
  std::vector<Vehicle> vehicles;
  while (static_cast<int>(vehicles.size()) < cars) {
    PathSeq path = randomWalk(rng, net, 6);
    if (path.empty()) continue;
    vehicles.push_back({Rational(startNum(rng)), speeds[speedPick(rng)], std::move(path)});
  }
  return makeTrafficConfig(net, std::move(vehicles));
}

// Straight-line configuration: every car traverses one full road. The
// diagonal-wave start times make crossings coincide frequently.
inline TrafficConfig randomStraightTC(std::mt19937& rng, int cars, int gridRows = 4,
                                      int gridCols = 4) {
  const Owrn net = randomOwrn(rng, gridRows, gridCols, true);
  std::uniform_int_distribution<int> axisPick(0, 1);
  std::uniform_int_distribution<int> start(0, 2);
  std::vector<Vehicle> vehicles;
  for (int c = 0; c < cars; ++c) {
    PathSeq path;
    if (axisPick(rng) == 0) {
      std::uniform_int_distribution<int> row(1, net.rows());
      const int i = row(rng);
      if (net.row(i).dir == 1) {
        for (int j = 1; j <= net.cols(); ++j) path.push_back({i, j});
      } else {
        for (int j = net.cols(); j >= 1; --j) path.push_back({i, j});
      }
    } else {
      std::uniform_int_distribution<int> col(1, net.cols());
      const int j = col(rng);
      if (net.col(j).dir == 1) {
        for (int i = 1; i <= net.rows(); ++i) path.push_back({i, j});
      } else {
        for (int i = net.rows(); i >= 1; --i) path.push_back({i, j});
      }
    }
    vehicles.push_back({Rational(start(rng)), Rational(1), std::move(path)});
  }
  return makeTrafficConfig(net, std::move(vehicles));
}

// Every horizontal car meets every vertical car: the conflict graph is
// K_{k,k} under unit speed and staggered starts.
inline TrafficConfig synchronizedCrossing(int k) {
  std::vector<int> ones(static_cast<std::size_t>(k), 1);
  const Owrn net = makeGrid(k, k, ones, ones);
  std::vector<Vehicle> vehicles;
  for (int r = 1; r <= k; ++r) {
    PathSeq path;
    for (int j = 1; j <= k; ++j) path.push_back({r, j});
    vehicles.push_back({Rational(r - 1), Rational(1), std::move(path)});
  }
  for (int c = 1; c <= k; ++c) {
    PathSeq path;
    for (int i = 1; i <= k; ++i) path.push_back({i, c});
    vehicles.push_back({Rational(c - 1), Rational(1), std::move(path)});
  }
  return makeTrafficConfig(net, std::move(vehicles));
}

// Independent collision oracle: schedules recomputed from vertex positions,
// pairwise nested-loop comparison. No hash join, no shared code path with
// detectCollisions beyond the model types.
inline std::vector<CollisionEvent> naiveCollisions(const TrafficConfig& tc) {
  struct Entry {
    VertexId vertex;
    Rational time;
    bool horizontal;
  };
  std::vector<std::vector<Entry>> tables;
  for (const Vehicle& car : tc.vehicles) {
    std::vector<Entry> table;
    long long walked = 0;
    for (std::size_t k = 0; k < car.path.size(); ++k) {
      if (k > 0) {
        const Point a = tc.network.position(car.path[k - 1]);
        const Point b = tc.network.position(car.path[k]);
        walked += std::llabs(b.x - a.x) + std::llabs(b.y - a.y);
      }
      const std::size_t dirIdx = k == 0 ? 1 : k;
      const bool horizontal = car.path[dirIdx - 1].i == car.path[dirIdx].i;
      table.push_back({car.path[k], car.start_time + Rational(walked) / car.speed, horizontal});
    }
    tables.push_back(std::move(table));
  }
  std::vector<CollisionEvent> events;
  for (std::size_t a = 0; a < tables.size(); ++a) {
    for (std::size_t b = a + 1; b < tables.size(); ++b) {
      for (const Entry& ea : tables[a]) {
        for (const Entry& eb : tables[b]) {
          if (ea.vertex == eb.vertex && ea.time == eb.time && ea.horizontal != eb.horizontal) {
            events.push_back({static_cast<int>(a), static_cast<int>(b), ea.vertex, ea.time});
          }
        }
      }
    }
  }
  std::sort(events.begin(), events.end(), [](const CollisionEvent& x, const CollisionEvent& y) {
    if (x.time != y.time) return x.time < y.time;
    if (x.car_a != y.car_a) return x.car_a < y.car_a;
    return x.car_b < y.car_b;
  });
  return events;
}

inline std::vector<std::pair<int, int>> allPairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  }
  return pairs;
}

inline std::vector<SimpleGraph> allGraphsOn(int n) {
  const auto pairs = allPairs(n);
  std::vector<SimpleGraph> graphs;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1u) edges.push_back(pairs[k]);
    }
    graphs.push_back(makeSimpleGraph(n, edges));
  }
  return graphs;
}

inline SimpleGraph randomGraph(std::mt19937& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : allPairs(n)) {
    if (coin(rng)) edges.emplace_back(a, b);
  }
  return makeSimpleGraph(n, edges);
}

inline bool isIndependent(const SimpleGraph& g, const std::vector<int>& nodes) {
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if (g.hasEdge(nodes[a], nodes[b])) return false;
    }
  }
  return true;
}

// Reference MIS size by subset enumeration (small n only).
inline int misSizeByEnumeration(const SimpleGraph& g) {
  int best = 0;
  for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
    std::vector<int> nodes;
    for (int v = 1; v <= g.n; ++v) {
      if (mask >> (v - 1) & 1u) nodes.push_back(v);
    }
    if (isIndependent(g, nodes)) best = std::max(best, static_cast<int>(nodes.size()));
  }
  return best;
}

}  // namespace owrn::testing
