#pragma once

#include "owrn/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace owrn {

enum class Axis { Horizontal, Vertical };

inline Axis crossAxis(Axis a) {
  return a == Axis::Horizontal ? Axis::Vertical : Axis::Horizontal;
}

inline const char* axisName(Axis a) {
  return a == Axis::Horizontal ? "horizontal" : "vertical";
}

enum class ErrorCode {
  DuplicateOffset,
  TooFewRoads,
  AxisMismatch,
  BrokenEdge,
  DegeneratePath,
  InvalidSpeed,
  TooLarge,
  NoRoom,
  InvalidDirection,
  NotStraightLine,
  ParseError,
  SemanticError,
};

const char* errorCodeName(ErrorCode code);

/// Domain error with a machine-checkable code. BrokenEdge carries the index
/// of the first violating consecutive pair.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

  Error(ErrorCode code, std::string message, std::size_t index = kNoIndex)
      : std::runtime_error(std::move(message)), code_(code), index_(index) {}

  ErrorCode code() const { return code_; }
  std::size_t index() const { return index_; }

 private:
  ErrorCode code_;
  std::size_t index_;
};

/// A directed axis-parallel line. dir 0 points toward the negative end of
/// the parallel axis, dir 1 toward the positive end. offset is the distance
/// from the parallel coordinate axis.
struct Road {
  Axis axis;
  int dir;           // 0 or 1
  long long offset;  // integer length-units

  friend bool operator==(const Road&, const Road&) = default;
};

/// Intersection of horizontal road i and vertical road j (both 1-based).
struct VertexId {
  int i;  // horizontal-road index, 1..n
  int j;  // vertical-road index, 1..m

  auto operator<=>(const VertexId&) const = default;
};

using PathSeq = std::vector<VertexId>;

/// Geometric point (x, y) in length-units.
struct Point {
  long long x;
  long long y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Directed grid of one-way roads. Both families are sorted by strictly
/// increasing offset; indices are 1-based.
struct Owrn {
  std::vector<Road> horizontal;  // X_1..X_n, bottom to top
  std::vector<Road> vertical;    // Y_1..Y_m, left to right

  int rows() const { return static_cast<int>(horizontal.size()); }
  int cols() const { return static_cast<int>(vertical.size()); }

  const Road& row(int i) const { return horizontal[static_cast<std::size_t>(i) - 1]; }
  const Road& col(int j) const { return vertical[static_cast<std::size_t>(j) - 1]; }

  bool inRange(VertexId v) const {
    return v.i >= 1 && v.i <= rows() && v.j >= 1 && v.j <= cols();
  }

  Point position(VertexId v) const { return {col(v.j).offset, row(v.i).offset}; }

  friend bool operator==(const Owrn&, const Owrn&) = default;
};

/// Builds a canonical Owrn: each family sorted ascending by offset and
/// re-indexed from 1. Throws DuplicateOffset, TooFewRoads or AxisMismatch.
Owrn validateOwrn(std::vector<Road> horizontal, std::vector<Road> vertical);

/// True iff u and v are consecutive on one road and that road's direction
/// points from u to v.
bool hasDirectedEdge(const Owrn& net, VertexId u, VertexId v);

/// Index of the first consecutive pair that is not a directed edge, or
/// nullopt when the whole path is valid. Singleton paths are valid here.
std::optional<std::size_t> findBrokenEdge(const Owrn& net, const PathSeq& path);

/// Throws BrokenEdge (with pair index) unless the path is valid.
void validatePath(const Owrn& net, const PathSeq& path);

/// Sum of geometric edge lengths along the path. Throws BrokenEdge.
long long pathLength(const Owrn& net, const PathSeq& path);

/// A car: start time, constant positive speed, and the vertex path it
/// traverses non-stop.
struct Vehicle {
  Rational start_time;
  Rational speed;
  PathSeq path;
};

struct TrafficConfig {
  Owrn network;
  std::vector<Vehicle> vehicles;  // index = car identity

  int carCount() const { return static_cast<int>(vehicles.size()); }
};

/// Validates every vehicle (positive speed, path of at least two vertices,
/// all edges direction-respecting) against the network.
TrafficConfig makeTrafficConfig(Owrn network, std::vector<Vehicle> vehicles);

/// Checks one vehicle against a network; throws on violation.
void validateVehicle(const Owrn& net, const Vehicle& car);

struct ScheduleEntry {
  VertexId vertex;
  Rational time;
  Axis axis;  // axis of the incoming edge; first vertex uses the first outgoing edge
};

/// Exact arrival times for every vertex on the car's path. Times are
/// start_time + prefix_length / speed and strictly increase.
std::vector<ScheduleEntry> arrivalSchedule(const Owrn& net, const Vehicle& car);

/// Axis of the directed edge u -> v (assumes adjacency).
Axis edgeAxis(VertexId u, VertexId v);

}  // namespace owrn

template <>
struct std::hash<owrn::VertexId> {
  std::size_t operator()(const owrn::VertexId& v) const {
    return std::hash<long long>()((static_cast<long long>(v.i) << 20) ^ v.j);
  }
};
