#include "owrn/connectivity.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace owrn {

namespace {

// Direction tuples (d(X_1), d(X_n), d(Y_1), d(Y_m)) that close the perimeter
// into a directed cycle: counter-clockwise and clockwise.
constexpr std::array<int, 4> kCounterClockwise{1, 0, 0, 1};
constexpr std::array<int, 4> kClockwise{0, 1, 1, 0};

std::vector<std::vector<int>> buildAdjacency(const Owrn& net, bool reversed) {
  const int n = net.rows();
  const int m = net.cols();
  auto id = [m](int i, int j) { return (i - 1) * m + (j - 1); };
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) * m);
  auto addEdge = [&](int ui, int uj, int vi, int vj) {
    if (reversed) {
      adj[id(vi, vj)].push_back(id(ui, uj));
    } else {
      adj[id(ui, uj)].push_back(id(vi, vj));
    }
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j + 1 <= m; ++j) {
      if (net.row(i).dir == 1) {
        addEdge(i, j, i, j + 1);
      } else {
        addEdge(i, j + 1, i, j);
      }
    }
  }
  for (int j = 1; j <= m; ++j) {
    for (int i = 1; i + 1 <= n; ++i) {
      if (net.col(j).dir == 1) {
        addEdge(i, j, i + 1, j);
      } else {
        addEdge(i + 1, j, i, j);
      }
    }
  }
  return adj;
}

bool reachesAll(const std::vector<std::vector<int>>& adj, int source) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> stack{source};
  seen[static_cast<std::size_t>(source)] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == adj.size();
}

// Walks straight along one road from `from` toward `to` and checks every
// step is a directed edge.
bool straightLineReaches(const Owrn& net, VertexId from, VertexId to) {
  if (from == to) return true;
  VertexId cur = from;
  while (cur != to) {
    VertexId next = cur;
    if (cur.i == to.i) {
      next.j += (to.j > cur.j) ? 1 : -1;
    } else if (cur.j == to.j) {
      next.i += (to.i > cur.i) ? 1 : -1;
    } else {
      return false;
    }
    if (!hasDirectedEdge(net, cur, next)) return false;
    cur = next;
  }
  return true;
}

}  // namespace

bool boundaryFormsCycle(const Owrn& net) {
  const std::array<int, 4> tuple{net.row(1).dir, net.row(net.rows()).dir, net.col(1).dir,
                                 net.col(net.cols()).dir};
  return tuple == kCounterClockwise || tuple == kClockwise;
}

bool stronglyConnected(const Owrn& net) {
  return reachesAll(buildAdjacency(net, false), 0) && reachesAll(buildAdjacency(net, true), 0);
}

BoundaryWitness reachBoundaryFrom(const Owrn& net, VertexId v) {
  if (!net.inRange(v)) throw Error(ErrorCode::SemanticError, "vertex out of range");
  BoundaryWitness w{};
  w.e = net.row(v.i).dir == 1 ? net.cols() : 1;
  w.f = net.col(v.j).dir == 1 ? net.rows() : 1;
  if (!straightLineReaches(net, v, VertexId{v.i, w.e}) ||
      !straightLineReaches(net, v, VertexId{w.f, v.j})) {
    throw std::logic_error("boundary witness not reachable by straight-line traversal");
  }
  return w;
}

BoundaryWitness reachableFromBoundary(const Owrn& net, VertexId v) {
  if (!net.inRange(v)) throw Error(ErrorCode::SemanticError, "vertex out of range");
  BoundaryWitness w{};
  w.e = net.row(v.i).dir == 1 ? 1 : net.cols();
  w.f = net.col(v.j).dir == 1 ? 1 : net.rows();
  if (!straightLineReaches(net, VertexId{v.i, w.e}, v) ||
      !straightLineReaches(net, VertexId{w.f, v.j}, v)) {
    throw std::logic_error("boundary witness cannot reach the vertex by straight-line traversal");
  }
  return w;
}

}  // namespace owrn
