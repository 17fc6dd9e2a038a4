#pragma once

#include "owrn/collision.hpp"
#include "owrn/model.hpp"

#include <vector>

namespace owrn {

enum class SolveMethod { ExactSearch, BipartiteKonig, BruteForce };

const char* solveMethodName(SolveMethod m);

/// A maximum collision-free subset of cars, with the route that produced it.
struct SubsetSolution {
  std::vector<int> selected;  // 0-based car/node indices, sorted ascending
  int size = 0;
  SolveMethod method = SolveMethod::ExactSearch;
};

/// Maximum independent set by plain exhaustive search (include-first DFS in
/// index order with a counting bound). Deterministic tie-break:
/// lexicographically smallest optimal set. Capped at 25 nodes (TooLarge).
SubsetSolution bruteForceMIS(const ConflictGraph& g);

/// Solves for a maximum-cardinality subset of cars whose restriction is
/// collision-free. Dispatches to the Konig route on straight-line
/// configurations, otherwise runs branch-and-bound with greedy max-degree
/// pivoting (capped at 25 cars). The returned set is re-verified
/// collision-free before returning.
SubsetSolution maxCollisionFreeSubset(const TrafficConfig& tc);

/// The branch-and-bound route regardless of path shape (capped at 25 cars).
SubsetSolution exactMaxSubset(const TrafficConfig& tc);

/// True iff every vehicle's path stays on a single road (zero turns).
bool isStraightLineTC(const TrafficConfig& tc);

/// Polynomial route for straight-line configurations: the conflict graph is
/// bipartite (horizontal movers vs vertical movers), so a maximum matching
/// plus the Konig cover construction yields a maximum independent set of
/// size |C| - matching.
SubsetSolution bipartiteMaxSubset(const TrafficConfig& tc);

}  // namespace owrn
