#include "owrn/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace owrn {

const char* errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateOffset: return "DuplicateOffset";
    case ErrorCode::TooFewRoads: return "TooFewRoads";
    case ErrorCode::AxisMismatch: return "AxisMismatch";
    case ErrorCode::BrokenEdge: return "BrokenEdge";
    case ErrorCode::DegeneratePath: return "DegeneratePath";
    case ErrorCode::InvalidSpeed: return "InvalidSpeed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoRoom: return "NoRoom";
    case ErrorCode::InvalidDirection: return "InvalidDirection";
    case ErrorCode::NotStraightLine: return "NotStraightLine";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

namespace {

std::vector<Road> canonicalFamily(std::vector<Road> roads, Axis axis, const char* name) {
  if (roads.size() < 2) {
    throw Error(ErrorCode::TooFewRoads,
                std::string(name) + " family needs at least 2 roads, got " +
                    std::to_string(roads.size()));
  }
  for (const Road& r : roads) {
    if (r.axis != axis) {
      throw Error(ErrorCode::AxisMismatch,
                  std::string("road with ") + axisName(r.axis) + " axis in " + name + " family");
    }
    if (r.dir != 0 && r.dir != 1) {
      throw Error(ErrorCode::InvalidDirection,
                  "road direction must be 0 or 1, got " + std::to_string(r.dir));
    }
  }
  std::sort(roads.begin(), roads.end(),
            [](const Road& a, const Road& b) { return a.offset < b.offset; });
  for (std::size_t k = 1; k < roads.size(); ++k) {
    if (roads[k].offset == roads[k - 1].offset) {
      throw Error(ErrorCode::DuplicateOffset,
                  std::string("two ") + name + " roads share offset " +
                      std::to_string(roads[k].offset));
    }
  }
  return roads;
}

}  // namespace

Owrn validateOwrn(std::vector<Road> horizontal, std::vector<Road> vertical) {
  Owrn net;
  net.horizontal = canonicalFamily(std::move(horizontal), Axis::Horizontal, "horizontal");
  net.vertical = canonicalFamily(std::move(vertical), Axis::Vertical, "vertical");
  return net;
}

Axis edgeAxis(VertexId u, VertexId v) {
  return u.i == v.i ? Axis::Horizontal : Axis::Vertical;
}

bool hasDirectedEdge(const Owrn& net, VertexId u, VertexId v) {
  if (!net.inRange(u) || !net.inRange(v)) return false;
  if (u.i == v.i && std::abs(u.j - v.j) == 1) {
    // Along horizontal road X_i; dir 1 moves toward larger column offsets.
    return net.row(u.i).dir == (v.j > u.j ? 1 : 0);
  }
  if (u.j == v.j && std::abs(u.i - v.i) == 1) {
    return net.col(u.j).dir == (v.i > u.i ? 1 : 0);
  }
  return false;
}

std::optional<std::size_t> findBrokenEdge(const Owrn& net, const PathSeq& path) {
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (!hasDirectedEdge(net, path[k], path[k + 1])) return k;
  }
  if (path.size() == 1 && !net.inRange(path[0])) return 0;
  return std::nullopt;
}

void validatePath(const Owrn& net, const PathSeq& path) {
  if (auto broken = findBrokenEdge(net, path)) {
    throw Error(ErrorCode::BrokenEdge, "path breaks at pair index " + std::to_string(*broken),
                *broken);
  }
}

long long pathLength(const Owrn& net, const PathSeq& path) {
  validatePath(net, path);
  long long total = 0;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const VertexId u = path[k];
    const VertexId v = path[k + 1];
    if (u.i == v.i) {
      total += std::llabs(net.col(v.j).offset - net.col(u.j).offset);
    } else {
      total += std::llabs(net.row(v.i).offset - net.row(u.i).offset);
    }
  }
  return total;
}

void validateVehicle(const Owrn& net, const Vehicle& car) {
  if (!car.speed.isPositive()) {
    throw Error(ErrorCode::InvalidSpeed, "vehicle speed must be positive, got " + car.speed.str());
  }
  if (car.path.size() < 2) {
    throw Error(ErrorCode::DegeneratePath, "vehicle path needs at least 2 vertices");
  }
  validatePath(net, car.path);
}

TrafficConfig makeTrafficConfig(Owrn network, std::vector<Vehicle> vehicles) {
  for (const Vehicle& car : vehicles) validateVehicle(network, car);
  return TrafficConfig{std::move(network), std::move(vehicles)};
}

std::vector<ScheduleEntry> arrivalSchedule(const Owrn& net, const Vehicle& car) {
  validateVehicle(net, car);
  std::vector<ScheduleEntry> schedule;
  schedule.reserve(car.path.size());
  schedule.push_back({car.path[0], car.start_time, edgeAxis(car.path[0], car.path[1])});
  long long prefix = 0;
  for (std::size_t k = 0; k + 1 < car.path.size(); ++k) {
    const VertexId u = car.path[k];
    const VertexId v = car.path[k + 1];
    if (u.i == v.i) {
      prefix += std::llabs(net.col(v.j).offset - net.col(u.j).offset);
    } else {
      prefix += std::llabs(net.row(v.i).offset - net.row(u.i).offset);
    }
    schedule.push_back({v, car.start_time + Rational(prefix) / car.speed, edgeAxis(u, v)});
  }
  return schedule;
}

}  // namespace owrn
