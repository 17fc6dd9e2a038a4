#include "owrn/io.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>
#include <utility>

namespace owrn {

namespace {

using Json = nlohmann::ordered_json;

Rational rationalFromJson(const Json& value, const std::string& field) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw Error(ErrorCode::ParseError, field + ": " + e.what());
    }
  }
  throw Error(ErrorCode::ParseError, field + ": expected integer or \"p/q\" string");
}

Json rationalToJson(const Rational& r) {
  if (r.isInteger() && r.num() >= std::numeric_limits<long long>::min() &&
      r.num() <= std::numeric_limits<long long>::max()) {
    return Json(r.num().convert_to<long long>());
  }
  return Json(r.str());
}

std::vector<Road> roadsFromJson(const Json& list, Axis axis, const std::string& field) {
  if (!list.is_array()) throw Error(ErrorCode::ParseError, field + ": expected an array");
  std::vector<Road> roads;
  roads.reserve(list.size());
  for (std::size_t k = 0; k < list.size(); ++k) {
    const Json& item = list[k];
    const std::string at = field + "[" + std::to_string(k) + "]";
    if (!item.is_object() || !item.contains("dir") || !item.contains("offset")) {
      throw Error(ErrorCode::ParseError, at + ": expected {\"dir\", \"offset\"}");
    }
    if (!item["dir"].is_number_integer() || !item["offset"].is_number_integer()) {
      throw Error(ErrorCode::ParseError, at + ": dir and offset must be integers");
    }
    roads.push_back({axis, item["dir"].get<int>(), item["offset"].get<long long>()});
  }
  return roads;
}

Json parseText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

TrafficConfig parseScenario(const std::string& text) {
  const Json doc = parseText(text);
  if (!doc.is_object() || !doc.contains("roads")) {
    throw Error(ErrorCode::ParseError, "scenario: expected an object with \"roads\"");
  }
  const Json& roads = doc["roads"];
  if (!roads.is_object() || !roads.contains("horizontal") || !roads.contains("vertical")) {
    throw Error(ErrorCode::ParseError,
                "scenario.roads: expected {\"horizontal\", \"vertical\"} arrays");
  }
  Owrn net = validateOwrn(roadsFromJson(roads["horizontal"], Axis::Horizontal, "roads.horizontal"),
                          roadsFromJson(roads["vertical"], Axis::Vertical, "roads.vertical"));

  std::vector<Vehicle> vehicles;
  if (doc.contains("vehicles")) {
    const Json& list = doc["vehicles"];
    if (!list.is_array()) throw Error(ErrorCode::ParseError, "vehicles: expected an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const Json& item = list[k];
      const std::string at = "vehicles[" + std::to_string(k) + "]";
      if (!item.is_object() || !item.contains("start_time") || !item.contains("speed") ||
          !item.contains("path")) {
        throw Error(ErrorCode::ParseError, at + ": expected {start_time, speed, path}");
      }
      Vehicle car;
      car.start_time = rationalFromJson(item["start_time"], at + ".start_time");
      car.speed = rationalFromJson(item["speed"], at + ".speed");
      const Json& path = item["path"];
      if (!path.is_array()) throw Error(ErrorCode::ParseError, at + ".path: expected an array");
      for (const Json& v : path) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
            !v[1].is_number_integer()) {
          throw Error(ErrorCode::ParseError, at + ".path: expected [i, j] integer pairs");
        }
        car.path.push_back({v[0].get<int>(), v[1].get<int>()});
      }
      vehicles.push_back(std::move(car));
    }
  }
  return makeTrafficConfig(std::move(net), std::move(vehicles));
}

std::string writeScenario(const TrafficConfig& tc) {
  Json doc;
  Json horizontal = Json::array();
  for (const Road& r : tc.network.horizontal) {
    horizontal.push_back({{"dir", r.dir}, {"offset", r.offset}});
  }
  Json vertical = Json::array();
  for (const Road& r : tc.network.vertical) {
    vertical.push_back({{"dir", r.dir}, {"offset", r.offset}});
  }
  doc["roads"] = {{"horizontal", std::move(horizontal)}, {"vertical", std::move(vertical)}};
  Json vehicles = Json::array();
  for (const Vehicle& car : tc.vehicles) {
    Json path = Json::array();
    for (const VertexId v : car.path) path.push_back({v.i, v.j});
    vehicles.push_back({{"start_time", rationalToJson(car.start_time)},
                        {"speed", rationalToJson(car.speed)},
                        {"path", std::move(path)}});
  }
  doc["vehicles"] = std::move(vehicles);
  return doc.dump(2) + "\n";
}

SimpleGraph parseGraph(const std::string& text) {
  const Json doc = parseText(text);
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw Error(ErrorCode::ParseError, "graph: expected an object with integer \"n\"");
  }
  std::vector<std::pair<int, int>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) {
      throw Error(ErrorCode::ParseError, "graph.edges: expected an array");
    }
    for (const Json& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw Error(ErrorCode::ParseError, "graph.edges: expected [a, b] integer pairs");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return makeSimpleGraph(doc["n"].get<int>(), edges);
}

std::string writeGraph(const SimpleGraph& g) {
  Json doc;
  doc["n"] = g.n;
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string writeReport(const std::vector<CollisionEvent>& events) {
  Json doc;
  doc["collision_free"] = events.empty();
  doc["count"] = events.size();
  Json list = Json::array();
  for (const CollisionEvent& e : events) {
    list.push_back({{"car_a", e.car_a + 1},
                    {"car_b", e.car_b + 1},
                    {"vertex", {e.vertex.i, e.vertex.j}},
                    {"time", e.time.str()}});
  }
  doc["collisions"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string writeReport(const SubsetSolution& solution) {
  Json doc;
  doc["method"] = solveMethodName(solution.method);
  doc["size"] = solution.size;
  Json selected = Json::array();
  for (int c : solution.selected) selected.push_back(c + 1);
  doc["selected"] = std::move(selected);
  return doc.dump(2) + "\n";
}

std::string writeReport(const VerificationReport& report) {
  Json doc;
  doc["passed"] = report.passed;
  doc["violations"] = report.violations;
  doc["n"] = report.n;
  doc["horizontal_roads"] = report.horizontal_roads;
  doc["vertical_roads"] = report.vertical_roads;
  doc["collision_count"] = report.collision_count;
  doc["total_path_vertices"] = report.total_path_vertices;
  return doc.dump(2) + "\n";
}

std::string exportDot(const ConflictGraph& g) {
  std::ostringstream out;
  out << "graph conflicts {\n";
  for (int c = 1; c <= g.node_count; ++c) out << "  c" << c << ";\n";
  for (const auto& [a, b] : g.edges) out << "  c" << a + 1 << " -- c" << b + 1 << ";\n";
  out << "}\n";
  return out.str();
}

std::string exportDot(const Owrn& net) {
  std::ostringstream out;
  out << "digraph owrn {\n  node [shape=point];\n";
  for (int i = 1; i <= net.rows(); ++i) {
    for (int j = 1; j <= net.cols(); ++j) {
      const Point p = net.position({i, j});
      out << "  v" << i << "_" << j << " [pos=\"" << p.x << "," << p.y << "!\"];\n";
    }
  }
  auto edge = [&out](VertexId u, VertexId v) {
    out << "  v" << u.i << "_" << u.j << " -> v" << v.i << "_" << v.j << ";\n";
  };
  for (int i = 1; i <= net.rows(); ++i) {
    for (int j = 1; j + 1 <= net.cols(); ++j) {
      if (net.row(i).dir == 1) {
        edge({i, j}, {i, j + 1});
      } else {
        edge({i, j + 1}, {i, j});
      }
    }
  }
  for (int j = 1; j <= net.cols(); ++j) {
    for (int i = 1; i + 1 <= net.rows(); ++i) {
      if (net.col(j).dir == 1) {
        edge({i, j}, {i + 1, j});
      } else {
        edge({i + 1, j}, {i, j});
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace owrn
