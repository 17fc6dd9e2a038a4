#include "owrn/shortest_path.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace owrn {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

std::vector<VertexId> outNeighbors(const Owrn& net, VertexId u) {
  std::vector<VertexId> out;
  const VertexId alongRow{u.i, u.j + (net.row(u.i).dir == 1 ? 1 : -1)};
  const VertexId alongCol{u.i + (net.col(u.j).dir == 1 ? 1 : -1), u.j};
  if (net.inRange(alongRow)) out.push_back(alongRow);
  if (net.inRange(alongCol)) out.push_back(alongCol);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> inNeighbors(const Owrn& net, VertexId u) {
  std::vector<VertexId> in;
  for (const VertexId cand : {VertexId{u.i, u.j - 1}, VertexId{u.i, u.j + 1},
                              VertexId{u.i - 1, u.j}, VertexId{u.i + 1, u.j}}) {
    if (net.inRange(cand) && hasDirectedEdge(net, cand, u)) in.push_back(cand);
  }
  return in;
}

long long edgeLength(const Owrn& net, VertexId u, VertexId v) {
  if (u.i == v.i) return std::abs(net.col(v.j).offset - net.col(u.j).offset);
  return std::abs(net.row(v.i).offset - net.row(u.i).offset);
}

int vertexIndex(const Owrn& net, VertexId v) { return (v.i - 1) * net.cols() + (v.j - 1); }

template <typename NeighborFn>
std::vector<long long> dijkstra(const Owrn& net, VertexId source, NeighborFn&& neighbors) {
  std::vector<long long> dist(static_cast<std::size_t>(net.rows()) * net.cols(), kInf);
  using Item = std::pair<long long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[static_cast<std::size_t>(vertexIndex(net, source))] = 0;
  queue.emplace(0, vertexIndex(net, source));
  while (!queue.empty()) {
    const auto [d, idx] = queue.top();
    queue.pop();
    if (d > dist[static_cast<std::size_t>(idx)]) continue;
    const VertexId u{idx / net.cols() + 1, idx % net.cols() + 1};
    for (const VertexId w : neighbors(net, u)) {
      const long long nd = d + edgeLength(net, u, w);
      auto& slot = dist[static_cast<std::size_t>(vertexIndex(net, w))];
      if (nd < slot) {
        slot = nd;
        queue.emplace(nd, vertexIndex(net, w));
      }
    }
  }
  return dist;
}

void requireInRange(const Owrn& net, VertexId v) {
  if (!net.inRange(v)) {
    throw Error(ErrorCode::SemanticError,
                "vertex (" + std::to_string(v.i) + "," + std::to_string(v.j) + ") out of range");
  }
}

}  // namespace

const char* turnName(Turn t) { return t == Turn::Left ? "Left" : "Right"; }

std::vector<Turn> turnSequence(const Owrn& net, const PathSeq& path) {
  validatePath(net, path);
  std::vector<Turn> turns;
  for (std::size_t k = 0; k + 2 < path.size(); ++k) {
    if (edgeAxis(path[k], path[k + 1]) == edgeAxis(path[k + 1], path[k + 2])) continue;
    const Point a = net.position(path[k]);
    const Point b = net.position(path[k + 1]);
    const Point c = net.position(path[k + 2]);
    const long long cross =
        (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
    turns.push_back(cross > 0 ? Turn::Left : Turn::Right);
  }
  return turns;
}

long long perimeter(const Owrn& net) {
  return 2 * ((net.vertical.back().offset - net.vertical.front().offset) +
              (net.horizontal.back().offset - net.horizontal.front().offset));
}

std::optional<TurnPath> dijkstraShortest(const Owrn& net, VertexId u, VertexId v) {
  requireInRange(net, u);
  requireInRange(net, v);
  if (u == v) return TurnPath{{u}, 0, {}};

  const auto distFrom = dijkstra(net, u, outNeighbors);
  const long long total = distFrom[static_cast<std::size_t>(vertexIndex(net, v))];
  if (total >= kInf) return std::nullopt;
  const auto distTo = dijkstra(net, v, inNeighbors);

  // Walk forward greedily, always taking the smallest next vertex that stays
  // on some shortest path; this realizes the lexicographically smallest
  // shortest vertex sequence.
  TurnPath result;
  result.length = total;
  result.path.push_back(u);
  VertexId cur = u;
  long long walked = 0;
  while (cur != v) {
    bool advanced = false;
    for (const VertexId w : outNeighbors(net, cur)) {
      const long long step = edgeLength(net, cur, w);
      if (walked + step + distTo[static_cast<std::size_t>(vertexIndex(net, w))] == total) {
        result.path.push_back(w);
        walked += step;
        cur = w;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("shortest-path reconstruction stalled");
  }
  result.turns = turnSequence(net, result.path);
  return result;
}

std::optional<TurnPath> turnBoundedShortest(const Owrn& net, VertexId u, VertexId v,
                                            int maxTurns) {
  requireInRange(net, u);
  requireInRange(net, v);
  if (maxTurns < 0) return std::nullopt;
  if (u == v) return TurnPath{{u}, 0, {}};

  // States: (vertex, axis of incoming edge, turns used). Reversing onto the
  // road just travelled is impossible on one-way roads, so heading changes
  // are exactly axis changes.
  const int m = net.cols();
  const int turnSlots = maxTurns + 1;
  const int stateCount = net.rows() * m * 2 * turnSlots;
  auto stateId = [&](VertexId w, Axis ax, int turns) {
    return ((vertexIndex(net, w) * 2) + (ax == Axis::Horizontal ? 0 : 1)) * turnSlots + turns;
  };
  std::vector<long long> dist(static_cast<std::size_t>(stateCount), kInf);
  std::vector<int> parent(static_cast<std::size_t>(stateCount), -1);  // -1 root (vertex u)

  using Item = std::pair<long long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (const VertexId w : outNeighbors(net, u)) {
    const int id = stateId(w, edgeAxis(u, w), 0);
    const long long d = edgeLength(net, u, w);
    if (d < dist[static_cast<std::size_t>(id)]) {
      dist[static_cast<std::size_t>(id)] = d;
      queue.emplace(d, id);
    }
  }
  while (!queue.empty()) {
    const auto [d, id] = queue.top();
    queue.pop();
    if (d > dist[static_cast<std::size_t>(id)]) continue;
    const int turns = id % turnSlots;
    const Axis ax = ((id / turnSlots) % 2) == 0 ? Axis::Horizontal : Axis::Vertical;
    const int vi = id / turnSlots / 2;
    const VertexId w{vi / m + 1, vi % m + 1};
    for (const VertexId x : outNeighbors(net, w)) {
      const Axis ax2 = edgeAxis(w, x);
      const int nt = turns + (ax2 != ax ? 1 : 0);
      if (nt > maxTurns) continue;
      const int nid = stateId(x, ax2, nt);
      const long long nd = d + edgeLength(net, w, x);
      if (nd < dist[static_cast<std::size_t>(nid)]) {
        dist[static_cast<std::size_t>(nid)] = nd;
        parent[static_cast<std::size_t>(nid)] = id;
        queue.emplace(nd, nid);
      }
    }
  }

  long long best = kInf;
  int bestId = -1;
  for (int ax = 0; ax < 2; ++ax) {
    for (int t = 0; t < turnSlots; ++t) {
      const int id = ((vertexIndex(net, v) * 2) + ax) * turnSlots + t;
      if (dist[static_cast<std::size_t>(id)] < best) {
        best = dist[static_cast<std::size_t>(id)];
        bestId = id;
      }
    }
  }
  if (bestId < 0) return std::nullopt;

  TurnPath result;
  result.length = best;
  for (int id = bestId; id != -1; id = parent[static_cast<std::size_t>(id)]) {
    const int vi = id / turnSlots / 2;
    result.path.push_back(VertexId{vi / m + 1, vi % m + 1});
  }
  result.path.push_back(u);
  std::reverse(result.path.begin(), result.path.end());
  result.turns = turnSequence(net, result.path);
  if (static_cast<int>(result.turns.size()) > maxTurns) {
    throw std::logic_error("turn-bounded search exceeded its bound");
  }
  return result;
}

}  // namespace owrn
