#pragma once

#include "owrn/model.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace owrn {

/// Undirected simple graph with 1-based node labels.
struct SimpleGraph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // first < second

  bool hasEdge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return edges.count({a, b}) > 0;
  }
};

/// Validates labels, drops duplicates, rejects self-loops.
SimpleGraph makeSimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);

/// Geometry and speed constants for the gadget construction. The coarse
/// spacing delta must be 5 * fine when a network gets refined; every detour
/// then adds exactly 2 * fine length, i.e. a delay of 2 * fine / omega.
struct ReductionParams {
  long long delta = 5;
  Rational omega = Rational(1);

  long long fine() const;        // delta / 5, validated
  Rational delayQuantum() const; // 2 * fine / omega
};

/// Output of reduce(): the generated configuration plus the bookkeeping the
/// verifier certifies against.
struct ReductionInstance {
  SimpleGraph input;
  ReductionParams params;
  TrafficConfig tc;
  bool refined = false;  // false only for the degenerate 1-node input
  std::map<std::pair<int, int>, VertexId> collision_vertices;  // (i,j), i<j
  std::map<std::pair<int, int>, int> delay_counts;             // prefix counts in P_j
};

/// Gadget realizing K_n as a conflict graph: a 2n x n grid where car i and
/// car j meet exactly once, both having travelled (i+j-2)*delta.
TrafficConfig completeGraphTC(int n, const ReductionParams& params);

/// Inserts 4 equi-spaced fine roads between every adjacent road pair of both
/// families and re-expresses every path edge as 5 fine edges. Road counts
/// become 10n-4 horizontal and 5n-4 vertical for the 2n x n gadget.
TrafficConfig refineNetwork(const TrafficConfig& tc, const ReductionParams& params);

/// The vertex where cars i and j meet (i < j), the start of c_j (i = 0), or
/// the next pair's vertex for the degenerate i = j case.
VertexId collisionVertex(const ReductionInstance& inst, int i, int j);

/// Replaces `count` single fine edges strictly between alpha and beta with
/// 3-edge detours, each adding exactly 2 * fine path length. Detour slots
/// are filled earliest-first. Throws NoRoom when the segment cannot host
/// `count` detours.
PathSeq insertDelay(const Owrn& net, const PathSeq& path, VertexId alpha, VertexId beta,
                    int count, long long fine);

/// Full reduction: gadget, refinement, then delay insertion driven by a DP
/// over pairs (i, j) in increasing (j, i) order. Cars i and j collide in the
/// result iff the input graph has edge (i, j).
ReductionInstance reduce(const SimpleGraph& g, const ReductionParams& params = {});

struct VerificationReport {
  bool passed = true;
  std::vector<std::string> violations;
  int n = 0;
  int horizontal_roads = 0;
  int vertical_roads = 0;
  long long total_path_vertices = 0;
  int collision_count = 0;

  void fail(std::string message) {
    passed = false;
    violations.push_back(std::move(message));
  }
};

/// Certifies an instance: (a) its conflict graph equals the input graph and
/// every designed collision happens exactly at its recorded vertex, (b) the
/// prefix-delay counts follow the edge/no-edge rule and every car carries
/// exactly i delays before its turn, (c) no coarse block holds more than two
/// detours, (d) road, vehicle and path-size counts stay in quadratic bounds.
VerificationReport verifyReduction(const ReductionInstance& inst);

}  // namespace owrn
