#pragma once

#include "owrn/model.hpp"

#include <optional>
#include <vector>

namespace owrn {

enum class Turn { Left, Right };

const char* turnName(Turn t);

/// A path with its geometric length and the handedness of each axis change.
struct TurnPath {
  PathSeq path;
  long long length = 0;
  std::vector<Turn> turns;
};

/// Minimum geometric length directed path, or nullopt when v is unreachable
/// from u. Among equal-length paths the lexicographically smallest vertex
/// sequence is returned.
std::optional<TurnPath> dijkstraShortest(const Owrn& net, VertexId u, VertexId v);

/// Shortest path among paths with at most maxTurns axis changes, or nullopt
/// when none exists within the bound.
std::optional<TurnPath> turnBoundedShortest(const Owrn& net, VertexId u, VertexId v,
                                            int maxTurns = 4);

/// One Left/Right entry per axis change, by cross-product sign of the
/// consecutive edge vectors.
std::vector<Turn> turnSequence(const Owrn& net, const PathSeq& path);

/// 2 * (width + height) of the bounding boundary roads.
long long perimeter(const Owrn& net);

}  // namespace owrn
