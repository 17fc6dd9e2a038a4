#include "owrn/subset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace owrn {

const char* solveMethodName(SolveMethod m) {
  switch (m) {
    case SolveMethod::ExactSearch: return "ExactSearch";
    case SolveMethod::BipartiteKonig: return "BipartiteKonig";
    case SolveMethod::BruteForce: return "BruteForce";
  }
  return "Unknown";
}

namespace {

constexpr int kExactCap = 25;

std::vector<std::uint64_t> adjacencyMasks(const ConflictGraph& g) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.node_count), 0);
  for (const auto& [a, b] : g.edges) {
    adj[static_cast<std::size_t>(a)] |= 1ULL << b;
    adj[static_cast<std::size_t>(b)] |= 1ULL << a;
  }
  return adj;
}

std::vector<int> maskToSorted(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    int v = std::countr_zero(mask);
    out.push_back(v);
    mask &= mask - 1;
  }
  return out;
}

// Plain exhaustive search: vertices decided in increasing index order,
// include branch first, strict improvement only. The first maximum found is
// therefore the lexicographically smallest one, and the counting bound only
// prunes subtrees that cannot strictly beat it.
void exhaustiveSearch(const std::vector<std::uint64_t>& adj, std::uint64_t avail,
                      std::uint64_t current, int currentCount, std::uint64_t& best,
                      int& bestCount) {
  if (currentCount + std::popcount(avail) <= bestCount) return;
  if (avail == 0) {
    best = current;
    bestCount = currentCount;
    return;
  }
  const int v = std::countr_zero(avail);
  const std::uint64_t bit = 1ULL << v;
  exhaustiveSearch(adj, avail & ~(adj[static_cast<std::size_t>(v)] | bit), current | bit,
                   currentCount + 1, best, bestCount);
  exhaustiveSearch(adj, avail & ~bit, current, currentCount, best, bestCount);
}

// Branch and bound with greedy max-degree pivoting; closed forms once the
// remaining graph has maximum degree <= 1.
void pivotSearch(const std::vector<std::uint64_t>& adj, std::uint64_t rem, int current,
                 int& best) {
  const int remCount = std::popcount(rem);
  if (current + remCount <= best) return;
  if (rem == 0) {
    best = std::max(best, current);
    return;
  }
  int pivot = -1;
  int maxDeg = -1;
  int degSum = 0;
  for (std::uint64_t scan = rem; scan;) {
    const int v = std::countr_zero(scan);
    scan &= scan - 1;
    const int d = std::popcount(adj[static_cast<std::size_t>(v)] & rem);
    degSum += d;
    if (d > maxDeg) {
      maxDeg = d;
      pivot = v;
    }
  }
  if (maxDeg == 0) {
    best = std::max(best, current + remCount);
    return;
  }
  if (maxDeg == 1) {
    // Disjoint edges plus isolated vertices: lose one vertex per edge.
    best = std::max(best, current + remCount - degSum / 2);
    return;
  }
  const std::uint64_t bit = 1ULL << pivot;
  pivotSearch(adj, rem & ~(adj[static_cast<std::size_t>(pivot)] | bit), current + 1, best);
  pivotSearch(adj, rem & ~bit, current, best);
}

int misSize(const std::vector<std::uint64_t>& adj, std::uint64_t rem) {
  int best = 0;
  pivotSearch(adj, rem, 0, best);
  return best;
}

// Lexicographically smallest independent set of the optimal size, built by
// greedy inclusion checked against the exact size oracle.
std::vector<int> lexSmallestMIS(const std::vector<std::uint64_t>& adj, int n) {
  const std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
  const int target = misSize(adj, all);
  std::vector<int> chosen;
  std::uint64_t rem = all;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t bit = 1ULL << v;
    if (!(rem & bit)) continue;
    const std::uint64_t afterInclude = rem & ~(adj[static_cast<std::size_t>(v)] | bit);
    if (static_cast<int>(chosen.size()) + 1 + misSize(adj, afterInclude) == target) {
      chosen.push_back(v);
      rem = afterInclude;
    } else {
      rem &= ~bit;
    }
  }
  return chosen;
}

void checkCap(int nodes, const char* what) {
  if (nodes > kExactCap) {
    throw Error(ErrorCode::TooLarge, std::string(what) + " capped at " +
                                         std::to_string(kExactCap) + " nodes, got " +
                                         std::to_string(nodes));
  }
}

Axis vehicleAxis(const Vehicle& car) {
  return edgeAxis(car.path[0], car.path[1]);
}

void verifySelection(const TrafficConfig& tc, const std::vector<int>& selected) {
  if (!isCollisionFree(restrictTo(tc, selected))) {
    throw std::logic_error("selected subset is not collision-free");
  }
}

}  // namespace

SubsetSolution bruteForceMIS(const ConflictGraph& g) {
  checkCap(g.node_count, "bruteForceMIS");
  const auto adj = adjacencyMasks(g);
  const std::uint64_t all = g.node_count == 0 ? 0 : (1ULL << g.node_count) - 1;
  std::uint64_t best = 0;
  int bestCount = -1;
  exhaustiveSearch(adj, all, 0, 0, best, bestCount);
  SubsetSolution sol;
  sol.selected = maskToSorted(best);
  sol.size = static_cast<int>(sol.selected.size());
  sol.method = SolveMethod::BruteForce;
  return sol;
}

bool isStraightLineTC(const TrafficConfig& tc) {
  for (const Vehicle& car : tc.vehicles) {
    for (std::size_t k = 1; k < car.path.size(); ++k) {
      if (edgeAxis(car.path[k - 1], car.path[k]) != vehicleAxis(car)) return false;
    }
  }
  return true;
}

SubsetSolution bipartiteMaxSubset(const TrafficConfig& tc) {
  if (!isStraightLineTC(tc)) {
    throw Error(ErrorCode::NotStraightLine, "bipartite route requires straight-line paths");
  }
  const ConflictGraph g = conflictGraph(tc);
  const int k = tc.carCount();

  std::vector<int> side(static_cast<std::size_t>(k));  // 0 = horizontal, 1 = vertical
  std::vector<int> leftCars;
  for (int c = 0; c < k; ++c) {
    side[static_cast<std::size_t>(c)] =
        vehicleAxis(tc.vehicles[static_cast<std::size_t>(c)]) == Axis::Horizontal ? 0 : 1;
    if (side[static_cast<std::size_t>(c)] == 0) leftCars.push_back(c);
  }
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(k));
  for (const auto& [a, b] : g.edges) {
    if (side[static_cast<std::size_t>(a)] == side[static_cast<std::size_t>(b)]) {
      throw std::logic_error("same-axis collision edge in straight-line configuration");
    }
    nbr[static_cast<std::size_t>(a)].push_back(b);
    nbr[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& list : nbr) std::sort(list.begin(), list.end());

  // Maximum matching by augmenting paths (left = horizontal movers).
  std::vector<int> match(static_cast<std::size_t>(k), -1);
  std::vector<char> visited(static_cast<std::size_t>(k));
  auto augment = [&](auto&& self, int u) -> bool {
    for (int w : nbr[static_cast<std::size_t>(u)]) {
      if (visited[static_cast<std::size_t>(w)]) continue;
      visited[static_cast<std::size_t>(w)] = 1;
      if (match[static_cast<std::size_t>(w)] == -1 ||
          self(self, match[static_cast<std::size_t>(w)])) {
        match[static_cast<std::size_t>(w)] = u;
        match[static_cast<std::size_t>(u)] = w;
        return true;
      }
    }
    return false;
  };
  int matchingSize = 0;
  for (int u : leftCars) {
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(augment, u)) ++matchingSize;
  }

  // Konig construction: alternating reachability from unmatched left
  // vertices; cover = (L \ Z) + (R & Z); independent set = complement.
  std::vector<char> inZ(static_cast<std::size_t>(k), 0);
  std::vector<int> stack;
  for (int u : leftCars) {
    if (match[static_cast<std::size_t>(u)] == -1) {
      inZ[static_cast<std::size_t>(u)] = 1;
      stack.push_back(u);
    }
  }
  while (!stack.empty()) {
    const int u = stack.back();  // always a left vertex
    stack.pop_back();
    for (int w : nbr[static_cast<std::size_t>(u)]) {
      if (inZ[static_cast<std::size_t>(w)] || match[static_cast<std::size_t>(u)] == w) continue;
      inZ[static_cast<std::size_t>(w)] = 1;
      const int next = match[static_cast<std::size_t>(w)];
      if (next != -1 && !inZ[static_cast<std::size_t>(next)]) {
        inZ[static_cast<std::size_t>(next)] = 1;
        stack.push_back(next);
      }
    }
  }

  SubsetSolution sol;
  for (int c = 0; c < k; ++c) {
    const bool left = side[static_cast<std::size_t>(c)] == 0;
    const bool z = inZ[static_cast<std::size_t>(c)] != 0;
    if ((left && z) || (!left && !z)) sol.selected.push_back(c);
  }
  sol.size = static_cast<int>(sol.selected.size());
  sol.method = SolveMethod::BipartiteKonig;
  if (sol.size != k - matchingSize) {
    throw std::logic_error("Konig identity violated: cover complement does not match");
  }
  verifySelection(tc, sol.selected);
  return sol;
}

SubsetSolution exactMaxSubset(const TrafficConfig& tc) {
  checkCap(tc.carCount(), "exact subset search");
  const ConflictGraph g = conflictGraph(tc);
  const auto adj = adjacencyMasks(g);
  SubsetSolution sol;
  sol.selected = lexSmallestMIS(adj, g.node_count);
  sol.size = static_cast<int>(sol.selected.size());
  sol.method = SolveMethod::ExactSearch;
  verifySelection(tc, sol.selected);
  return sol;
}

SubsetSolution maxCollisionFreeSubset(const TrafficConfig& tc) {
  if (isStraightLineTC(tc)) return bipartiteMaxSubset(tc);
  return exactMaxSubset(tc);
}

}  // namespace owrn
