#pragma once

#include "owrn/model.hpp"

namespace owrn {

/// Boundary vertices a given vertex can reach (or be reached from) by
/// straight-line traversal: v_{i,e} along its row, v_{f,j} along its column.
struct BoundaryWitness {
  int e;  // column index, 1 or m
  int f;  // row index, 1 or n

  friend bool operator==(const BoundaryWitness&, const BoundaryWitness&) = default;
};

/// True iff the four boundary roads (X_1, X_n, Y_1, Y_m) form a directed
/// cycle around the perimeter. Depends only on the four boundary direction
/// bits; the two admissible tuples were derived by exhaustive reachability
/// on 2x2 grids (see the connectivity tests).
bool boundaryFormsCycle(const Owrn& net);

/// Independent oracle: true iff every vertex reaches every other vertex in
/// the explicit n*m digraph (forward + backward search from one vertex).
bool stronglyConnected(const Owrn& net);

/// Boundary vertices reachable from v by moving along v's two roads.
BoundaryWitness reachBoundaryFrom(const Owrn& net, VertexId v);

/// Boundary vertices from which v is reachable along v's two roads.
BoundaryWitness reachableFromBoundary(const Owrn& net, VertexId v);

}  // namespace owrn
