#pragma once

#include "owrn/collision.hpp"
#include "owrn/model.hpp"
#include "owrn/reduction.hpp"
#include "owrn/shortest_path.hpp"
#include "owrn/subset.hpp"

#include <string>

namespace owrn {

/// Parses a scenario document:
///   {"roads": {"horizontal": [{"dir":0|1, "offset":int}, ...],
///              "vertical":   [...]},
///    "vehicles": [{"start_time": rat, "speed": rat, "path": [[i,j], ...]}]}
/// Rationals are JSON integers or "p/q" strings. Path indices are 1-based
/// and refer to the families after sorting by offset. "vehicles" may be
/// omitted. Shape problems raise ParseError; domain problems raise the
/// corresponding model error.
TrafficConfig parseScenario(const std::string& text);

/// Canonical serialization; parse(write(parse(x))) == parse(x) and the
/// output is byte-stable across runs.
std::string writeScenario(const TrafficConfig& tc);

/// Parses {"n": int, "edges": [[a,b], ...]} with 1-based labels; unordered
/// duplicates collapse to one edge.
SimpleGraph parseGraph(const std::string& text);

std::string writeGraph(const SimpleGraph& g);

std::string writeReport(const std::vector<CollisionEvent>& events);
std::string writeReport(const SubsetSolution& solution);
std::string writeReport(const VerificationReport& report);

std::string exportDot(const ConflictGraph& g);
std::string exportDot(const Owrn& net);

}  // namespace owrn
