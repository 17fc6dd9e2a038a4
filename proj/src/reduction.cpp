#include "owrn/reduction.hpp"

#include "owrn/collision.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace owrn {

SimpleGraph makeSimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) {
    throw Error(ErrorCode::SemanticError, "graph needs at least 1 node, got " + std::to_string(n));
  }
  SimpleGraph g;
  g.n = n;
  for (auto [a, b] : edges) {
    if (a == b) {
      throw Error(ErrorCode::SemanticError, "self-loop on node " + std::to_string(a));
    }
    if (a < 1 || a > n || b < 1 || b > n) {
      throw Error(ErrorCode::SemanticError,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    }
    if (a > b) std::swap(a, b);
    g.edges.insert({a, b});
  }
  return g;
}

long long ReductionParams::fine() const {
  if (delta < 5 || delta % 5 != 0) {
    throw Error(ErrorCode::SemanticError,
                "refinement needs delta to be a positive multiple of 5, got " +
                    std::to_string(delta));
  }
  return delta / 5;
}

Rational ReductionParams::delayQuantum() const { return Rational(2 * fine()) / omega; }

TrafficConfig completeGraphTC(int n, const ReductionParams& params) {
  if (n < 1) {
    throw Error(ErrorCode::SemanticError, "gadget needs n >= 1, got " + std::to_string(n));
  }
  if (params.delta < 1) {
    throw Error(ErrorCode::SemanticError, "road spacing must be positive");
  }
  if (!params.omega.isPositive()) {
    throw Error(ErrorCode::InvalidSpeed, "gadget speed must be positive");
  }

  std::vector<Road> horizontal;
  for (int i = 1; i <= 2 * n; ++i) {
    horizontal.push_back({Axis::Horizontal, i == 1 ? 0 : 1, static_cast<long long>(i - 1) * params.delta});
  }
  // A valid network needs two roads per family; pad the single-node gadget.
  const int m = std::max(n, 2);
  std::vector<Road> vertical;
  for (int j = 1; j <= m; ++j) {
    vertical.push_back({Axis::Vertical, j == 1 ? 1 : 0, static_cast<long long>(j - 1) * params.delta});
  }
  Owrn net = validateOwrn(std::move(horizontal), std::move(vertical));

  std::vector<Vehicle> cars;
  if (n == 1) {
    cars.push_back({Rational(0), params.omega, {{1, 1}, {2, 1}}});
  } else {
    for (int i = 1; i <= n; ++i) {
      const int r = n + i - 1;
      const int q = n - i + 1;
      PathSeq path;
      for (int row = r; row >= q; --row) path.push_back({row, i});
      for (int col = i + 1; col <= n; ++col) path.push_back({q, col});
      cars.push_back({Rational(0), params.omega, std::move(path)});
    }
  }
  return makeTrafficConfig(std::move(net), std::move(cars));
}

namespace {

// Fine-road directions at +g, +2g, +3g, +4g above/right of a coarse road.
constexpr int kFineDirs[4] = {1, 0, 1, 0};

std::vector<Road> refineFamily(const std::vector<Road>& roads, Axis axis, long long delta,
                               long long g) {
  for (std::size_t k = 0; k + 1 < roads.size(); ++k) {
    if (roads[k + 1].offset - roads[k].offset != delta) {
      throw Error(ErrorCode::SemanticError,
                  "refinement needs equi-spaced roads with spacing " + std::to_string(delta));
    }
  }
  std::vector<Road> out;
  out.reserve(roads.size() * 5);
  for (std::size_t k = 0; k < roads.size(); ++k) {
    out.push_back(roads[k]);
    if (k + 1 < roads.size()) {
      for (int t = 1; t <= 4; ++t) {
        out.push_back({axis, kFineDirs[t - 1], roads[k].offset + t * g});
      }
    }
  }
  return out;
}

VertexId liftToRefined(VertexId v) { return {5 * (v.i - 1) + 1, 5 * (v.j - 1) + 1}; }

struct DetourSlot {
  std::size_t edge;  // detour replaces path[edge] -> path[edge + 1]
  VertexId e1;
  VertexId e2;
};

// Quadrilateral detour around the fine edge g1 -> g2 through the adjacent
// road `side` steps over in the cross family, if all three replacement
// edges exist and both spacings equal `fine`.
std::optional<std::pair<VertexId, VertexId>> detourVia(const Owrn& net, VertexId g1, VertexId g2,
                                                       int side, long long fine) {
  VertexId e1{};
  VertexId e2{};
  if (g1.j == g2.j) {
    const int lateral = g1.j + side;
    if (lateral < 1 || lateral > net.cols()) return std::nullopt;
    if (std::llabs(net.col(lateral).offset - net.col(g1.j).offset) != fine) return std::nullopt;
    if (std::llabs(net.row(g2.i).offset - net.row(g1.i).offset) != fine) return std::nullopt;
    e1 = {g1.i, lateral};
    e2 = {g2.i, lateral};
  } else {
    const int lateral = g1.i + side;
    if (lateral < 1 || lateral > net.rows()) return std::nullopt;
    if (std::llabs(net.row(lateral).offset - net.row(g1.i).offset) != fine) return std::nullopt;
    if (std::llabs(net.col(g2.j).offset - net.col(g1.j).offset) != fine) return std::nullopt;
    e1 = {lateral, g1.j};
    e2 = {lateral, g2.j};
  }
  if (hasDirectedEdge(net, g1, e1) && hasDirectedEdge(net, e1, e2) && hasDirectedEdge(net, e2, g2)) {
    return std::make_pair(e1, e2);
  }
  return std::nullopt;
}

// Detour slots available on edges whose endpoints lie strictly between the
// path positions posA and posB, in path order.
std::vector<DetourSlot> eligibleSlots(const Owrn& net, const PathSeq& path, std::size_t posA,
                                      std::size_t posB, long long fine) {
  std::vector<DetourSlot> slots;
  if (posB < 2) return slots;
  for (std::size_t k = posA + 1; k + 1 <= posB - 1; ++k) {
    const VertexId g1 = path[k];
    const VertexId g2 = path[k + 1];
    const int firstSide = (g1.j == g2.j) ? -1 : +1;
    for (const int side : {firstSide, -firstSide}) {
      if (auto via = detourVia(net, g1, g2, side, fine)) {
        slots.push_back({k, via->first, via->second});
        break;
      }
    }
  }
  return slots;
}

PathSeq applyDetours(const PathSeq& path, std::vector<DetourSlot> slots) {
  std::sort(slots.begin(), slots.end(),
            [](const DetourSlot& a, const DetourSlot& b) { return a.edge < b.edge; });
  PathSeq out;
  out.reserve(path.size() + 2 * slots.size());
  std::size_t next = 0;
  for (std::size_t k = 0; k < path.size(); ++k) {
    out.push_back(path[k]);
    if (next < slots.size() && slots[next].edge == k) {
      out.push_back(slots[next].e1);
      out.push_back(slots[next].e2);
      ++next;
    }
  }
  return out;
}

void appendSlots(std::vector<DetourSlot>& plan, const Owrn& net, const PathSeq& path,
                 std::size_t posA, std::size_t posB, int count, long long fine) {
  if (count == 0) return;
  if (count < 0) throw std::logic_error("negative delay count in reduction plan");
  const auto slots = eligibleSlots(net, path, posA, posB, fine);
  if (static_cast<int>(slots.size()) < count) {
    throw Error(ErrorCode::NoRoom, "segment holds " + std::to_string(slots.size()) +
                                       " detour slots, need " + std::to_string(count));
  }
  plan.insert(plan.end(), slots.begin(), slots.begin() + count);
}

std::unordered_map<VertexId, std::size_t> positionIndex(const PathSeq& path) {
  std::unordered_map<VertexId, std::size_t> pos;
  pos.reserve(path.size() * 2);
  for (std::size_t k = 0; k < path.size(); ++k) pos.emplace(path[k], k);
  return pos;
}

}  // namespace

TrafficConfig refineNetwork(const TrafficConfig& tc, const ReductionParams& params) {
  const long long g = params.fine();
  std::vector<Road> horizontal =
      refineFamily(tc.network.horizontal, Axis::Horizontal, params.delta, g);
  std::vector<Road> vertical = refineFamily(tc.network.vertical, Axis::Vertical, params.delta, g);
  Owrn net = validateOwrn(std::move(horizontal), std::move(vertical));

  std::vector<Vehicle> cars;
  cars.reserve(tc.vehicles.size());
  for (const Vehicle& car : tc.vehicles) {
    PathSeq path;
    path.reserve((car.path.size() - 1) * 5 + 1);
    path.push_back(liftToRefined(car.path[0]));
    for (std::size_t k = 0; k + 1 < car.path.size(); ++k) {
      const VertexId lu = liftToRefined(car.path[k]);
      const VertexId lv = liftToRefined(car.path[k + 1]);
      const int di = (lv.i > lu.i) - (lv.i < lu.i);
      const int dj = (lv.j > lu.j) - (lv.j < lu.j);
      for (int s = 1; s <= 5; ++s) path.push_back({lu.i + di * s, lu.j + dj * s});
    }
    cars.push_back({car.start_time, car.speed, std::move(path)});
  }
  return makeTrafficConfig(std::move(net), std::move(cars));
}

PathSeq insertDelay(const Owrn& net, const PathSeq& path, VertexId alpha, VertexId beta,
                    int count, long long fine) {
  if (count < 0) throw Error(ErrorCode::SemanticError, "delay count must be non-negative");
  if (count == 0) return path;
  const auto itA = std::find(path.begin(), path.end(), alpha);
  if (itA == path.end()) throw Error(ErrorCode::SemanticError, "alpha is not on the path");
  const auto itB = std::find(itA, path.end(), beta);
  if (itB == path.end()) {
    throw Error(ErrorCode::SemanticError, "beta is not on the path after alpha");
  }
  const auto posA = static_cast<std::size_t>(itA - path.begin());
  const auto posB = static_cast<std::size_t>(itB - path.begin());
  auto slots = eligibleSlots(net, path, posA, posB, fine);
  if (static_cast<int>(slots.size()) < count) {
    throw Error(ErrorCode::NoRoom, "segment holds " + std::to_string(slots.size()) +
                                       " detour slots, need " + std::to_string(count));
  }
  slots.resize(static_cast<std::size_t>(count));
  PathSeq out = applyDetours(path, std::move(slots));
  if (findBrokenEdge(net, out)) {
    throw Error(ErrorCode::InvalidDirection, "detour produced an invalid edge");
  }
  return out;
}

VertexId collisionVertex(const ReductionInstance& inst, int i, int j) {
  const int n = inst.input.n;
  if (i < 0 || j < 1 || j > n || i > j) {
    throw Error(ErrorCode::SemanticError, "collisionVertex needs 0 <= i <= j <= n");
  }
  if (i == 0) return inst.tc.vehicles[static_cast<std::size_t>(j) - 1].path.front();
  if (i == j) {
    if (j == n) {
      throw Error(ErrorCode::SemanticError, "self pair (n, n) has no successor pair");
    }
    return collisionVertex(inst, i, j + 1);
  }
  const VertexId coarse{n - i + 1, j};
  return inst.refined ? liftToRefined(coarse) : coarse;
}

ReductionInstance reduce(const SimpleGraph& g, const ReductionParams& params) {
  ReductionInstance inst;
  inst.input = g;
  inst.params = params;
  const int n = g.n;
  if (n == 1) {
    // No pairs, so no refinement or delays are needed.
    inst.tc = completeGraphTC(1, params);
    inst.refined = false;
    return inst;
  }

  const TrafficConfig coarse = completeGraphTC(n, params);
  TrafficConfig fineTc = refineNetwork(coarse, params);
  const long long fineStep = params.fine();
  const Owrn& net = fineTc.network;
  auto cvRef = [n](int i, int j) { return VertexId{5 * (n - i) + 1, 5 * (j - 1) + 1}; };

  std::vector<Vehicle> cars = std::move(fineTc.vehicles);

  // Pairs (i, j) in increasing (j, i) order. Before the meeting vertex of
  // (i, j), path j must carry i detours when the input has the edge and
  // i - 1 otherwise; afterwards it is topped up to j detours total, all
  // placed before its turn so that, as the lower-indexed car of later
  // pairs, it always presents exactly j.
  for (int j = 2; j <= n; ++j) {
    PathSeq& path = cars[static_cast<std::size_t>(j) - 1].path;
    const auto pos = positionIndex(path);
    std::vector<DetourSlot> plan;
    int prev = 0;
    std::size_t prevPos = 0;
    for (int i = 1; i < j; ++i) {
      const int need = g.hasEdge(i, j) ? i : i - 1;
      const std::size_t cvPos = pos.at(cvRef(i, j));
      appendSlots(plan, net, path, prevPos, cvPos, need - prev, fineStep);
      prev = need;
      prevPos = cvPos;
      inst.delay_counts[{i, j}] = need;
      inst.collision_vertices[{i, j}] = cvRef(i, j);
    }
    const std::size_t turnPos = pos.at(VertexId{5 * (n - j) + 1, 5 * (j - 1) + 1});
    appendSlots(plan, net, path, prevPos, turnPos, j - prev, fineStep);
    path = applyDetours(path, std::move(plan));
  }
  {
    // The first car has no vertical leg; its single delay sits before the
    // first vertex it shares with anyone.
    PathSeq& path = cars[0].path;
    const auto pos = positionIndex(path);
    std::vector<DetourSlot> plan;
    appendSlots(plan, net, path, 0, pos.at(cvRef(1, 2)), 1, fineStep);
    path = applyDetours(path, std::move(plan));
  }

  inst.tc = makeTrafficConfig(net, std::move(cars));
  inst.refined = true;
  return inst;
}

namespace {

long long manhattan(const Owrn& net, VertexId a, VertexId b) {
  const Point pa = net.position(a);
  const Point pb = net.position(b);
  return std::llabs(pa.x - pb.x) + std::llabs(pa.y - pb.y);
}

// Detour count before the first occurrence of target, recovered from the
// excess of walked length over straight-line progress. nullopt when the
// excess is not a whole number of 2g quanta.
std::optional<long long> prefixDetours(const Owrn& net, const PathSeq& path, VertexId target,
                                       long long g) {
  const auto it = std::find(path.begin(), path.end(), target);
  if (it == path.end()) return std::nullopt;
  const PathSeq prefix(path.begin(), it + 1);
  const long long excess = pathLength(net, prefix) - manhattan(net, path.front(), target);
  if (excess < 0 || excess % (2 * g) != 0) return std::nullopt;
  return excess / (2 * g);
}

bool isCoarseSpineVertex(VertexId v) { return v.i % 5 == 1 && v.j % 5 == 1; }

std::string pairLabel(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string vertexLabel(VertexId v) {
  return "v(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

}  // namespace

VerificationReport verifyReduction(const ReductionInstance& inst) {
  VerificationReport report;
  const int n = inst.input.n;
  report.n = n;
  report.horizontal_roads = inst.tc.network.rows();
  report.vertical_roads = inst.tc.network.cols();
  for (const Vehicle& car : inst.tc.vehicles) {
    report.total_path_vertices += static_cast<long long>(car.path.size());
  }

  // (a) the conflict graph must equal the input graph, with every designed
  // collision happening exactly once at its recorded vertex.
  const auto events = detectCollisions(inst.tc);
  report.collision_count = static_cast<int>(events.size());
  std::set<std::pair<int, int>> actual;
  std::map<std::pair<int, int>, std::vector<CollisionEvent>> byPair;
  for (const CollisionEvent& e : events) {
    actual.insert({e.car_a + 1, e.car_b + 1});
    byPair[{e.car_a + 1, e.car_b + 1}].push_back(e);
  }
  for (const auto& edge : actual) {
    if (!inst.input.edges.count(edge)) {
      const auto& e = byPair[edge].front();
      report.fail("spurious collision " + pairLabel(edge.first, edge.second) + " at " +
                  vertexLabel(e.vertex) + " t=" + e.time.str());
    }
  }
  for (const auto& edge : inst.input.edges) {
    if (!actual.count(edge)) {
      report.fail("missing collision for edge " + pairLabel(edge.first, edge.second));
    } else {
      const auto& list = byPair[edge];
      const VertexId expected = collisionVertex(inst, edge.first, edge.second);
      if (list.size() != 1) {
        report.fail("pair " + pairLabel(edge.first, edge.second) + " collides " +
                    std::to_string(list.size()) + " times, expected once");
      } else if (list.front().vertex != expected) {
        report.fail("pair " + pairLabel(edge.first, edge.second) + " collides at " +
                    vertexLabel(list.front().vertex) + ", expected " + vertexLabel(expected));
      }
    }
  }

  if (inst.refined) {
    const long long g = inst.params.fine();
    const Owrn& net = inst.tc.network;

    // (b) prefix-delay accounting for both cars of every pair, plus the
    // per-car total.
    for (int j = 2; j <= n; ++j) {
      const PathSeq& pathJ = inst.tc.vehicles[static_cast<std::size_t>(j) - 1].path;
      for (int i = 1; i < j; ++i) {
        const VertexId cv = collisionVertex(inst, i, j);
        const long long required = inst.input.hasEdge(i, j) ? i : i - 1;
        const auto prefixJ = prefixDetours(net, pathJ, cv, g);
        if (!prefixJ) {
          report.fail("pair " + pairLabel(i, j) + ": non-quantized delay prefix in P_" +
                      std::to_string(j));
        } else if (*prefixJ != required) {
          report.fail("pair " + pairLabel(i, j) + ": P_" + std::to_string(j) + " carries " +
                      std::to_string(*prefixJ) + " delays before " + vertexLabel(cv) +
                      ", required " + std::to_string(required));
        }
        const auto recorded = inst.delay_counts.find({i, j});
        if (recorded != inst.delay_counts.end() && recorded->second != required) {
          report.fail("pair " + pairLabel(i, j) + ": recorded count " +
                      std::to_string(recorded->second) + " disagrees with rule " +
                      std::to_string(required));
        }
        const PathSeq& pathI = inst.tc.vehicles[static_cast<std::size_t>(i) - 1].path;
        const auto prefixI = prefixDetours(net, pathI, cv, g);
        if (!prefixI || *prefixI != i) {
          report.fail("pair " + pairLabel(i, j) + ": P_" + std::to_string(i) +
                      " does not present exactly " + std::to_string(i) + " delays at " +
                      vertexLabel(cv));
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      const PathSeq& path = inst.tc.vehicles[static_cast<std::size_t>(i) - 1].path;
      const auto total = prefixDetours(net, path, path.back(), g);
      if (!total || *total != i) {
        report.fail("P_" + std::to_string(i) + " carries " +
                    (total ? std::to_string(*total) : std::string("a non-quantized number of")) +
                    " delays in total, expected " + std::to_string(i));
      }
    }

    // (c) at most two detours between consecutive coarse vertices.
    for (int i = 1; i <= n; ++i) {
      const PathSeq& path = inst.tc.vehicles[static_cast<std::size_t>(i) - 1].path;
      std::size_t blockStart = 0;
      for (std::size_t k = 1; k < path.size(); ++k) {
        if (!isCoarseSpineVertex(path[k])) continue;
        const PathSeq segment(path.begin() + static_cast<std::ptrdiff_t>(blockStart),
                              path.begin() + static_cast<std::ptrdiff_t>(k) + 1);
        const long long len = pathLength(net, segment);
        const long long excess = len - 5 * g;
        if (excess < 0 || excess % (2 * g) != 0 || excess / (2 * g) > 2) {
          report.fail("P_" + std::to_string(i) + ": coarse block ending at " +
                      vertexLabel(path[k]) + " has irregular length " + std::to_string(len));
        }
        blockStart = k;
      }
    }

    // (d) size bounds.
    if (report.horizontal_roads != 10 * n - 4 || report.vertical_roads != 5 * n - 4) {
      report.fail("road counts (" + std::to_string(report.horizontal_roads) + "," +
                  std::to_string(report.vertical_roads) + ") differ from (" +
                  std::to_string(10 * n - 4) + "," + std::to_string(5 * n - 4) + ")");
    }
  }
  if (inst.tc.carCount() != n) {
    report.fail("vehicle count " + std::to_string(inst.tc.carCount()) + " differs from " +
                std::to_string(n));
  }
  if (report.total_path_vertices > 12LL * n * n) {
    report.fail("total path vertices " + std::to_string(report.total_path_vertices) +
                " exceed quadratic bound " + std::to_string(12LL * n * n));
  }
  return report;
}

}  // namespace owrn
