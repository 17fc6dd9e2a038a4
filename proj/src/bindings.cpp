#include "owrn/connectivity.hpp"
#include "owrn/io.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace owrn;

namespace {

Rational rationalFromObject(const py::object& obj) {
  if (py::isinstance<Rational>(obj)) return obj.cast<Rational>();
  if (py::isinstance<py::int_>(obj)) return Rational(BigInt(py::str(obj).cast<std::string>()));
  if (py::isinstance<py::str>(obj)) return Rational::parse(obj.cast<std::string>());
  // Anything Fraction-like with integer numerator/denominator attributes.
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
    return Rational(BigInt(py::str(obj.attr("numerator")).cast<std::string>()),
                    BigInt(py::str(obj.attr("denominator")).cast<std::string>()));
  }
  throw py::type_error("expected int, 'p/q' string or Fraction-like value");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "One-way road networks: exact collision simulation, maximum "
            "collision-free traffic subsets, conflict-graph gadget "
            "construction and turn-bounded shortest paths";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "OwrnError");

  py::class_<Rational>(m, "Rational")
      .def(py::init([](const py::object& obj) { return rationalFromObject(obj); }))
      .def(py::init([](const py::object& num, const py::object& den) {
             return rationalFromObject(num) / rationalFromObject(den);
           }),
           py::arg("num"), py::arg("den"))
      .def_property_readonly("numerator", [](const Rational& r) { return py::int_(py::str(r.num().str())); })
      .def_property_readonly("denominator", [](const Rational& r) { return py::int_(py::str(r.den().str())); })
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
      .def("__hash__", &Rational::hash)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self);
  py::implicitly_convertible<py::int_, Rational>();
  py::implicitly_convertible<py::str, Rational>();

  py::enum_<Axis>(m, "Axis")
      .value("Horizontal", Axis::Horizontal)
      .value("Vertical", Axis::Vertical);
  py::enum_<Turn>(m, "Turn").value("Left", Turn::Left).value("Right", Turn::Right);
  py::enum_<SolveMethod>(m, "SolveMethod")
      .value("ExactSearch", SolveMethod::ExactSearch)
      .value("BipartiteKonig", SolveMethod::BipartiteKonig)
      .value("BruteForce", SolveMethod::BruteForce);

  py::class_<Road>(m, "Road")
      .def(py::init<Axis, int, long long>(), py::arg("axis"), py::arg("dir"), py::arg("offset"))
      .def_readwrite("axis", &Road::axis)
      .def_readwrite("dir", &Road::dir)
      .def_readwrite("offset", &Road::offset)
      .def("__repr__", [](const Road& r) {
        std::ostringstream out;
        out << "Road(" << axisName(r.axis) << ", dir=" << r.dir << ", offset=" << r.offset << ")";
        return out.str();
      });

  py::class_<VertexId>(m, "VertexId")
      .def(py::init<int, int>(), py::arg("i"), py::arg("j"))
      .def(py::init([](const py::tuple& t) {
        if (t.size() != 2) throw py::type_error("vertex tuple must be (i, j)");
        return VertexId{t[0].cast<int>(), t[1].cast<int>()};
      }))
      .def_readwrite("i", &VertexId::i)
      .def_readwrite("j", &VertexId::j)
      .def("__eq__", [](const VertexId& a, const VertexId& b) { return a == b; })
      .def("__hash__", [](const VertexId& v) { return std::hash<VertexId>()(v); })
      .def("__repr__", [](const VertexId& v) {
        return "VertexId(" + std::to_string(v.i) + ", " + std::to_string(v.j) + ")";
      });
  py::implicitly_convertible<py::tuple, VertexId>();

  py::class_<Owrn>(m, "Owrn")
      .def_readonly("horizontal", &Owrn::horizontal)
      .def_readonly("vertical", &Owrn::vertical)
      .def("rows", &Owrn::rows)
      .def("cols", &Owrn::cols)
      .def("__repr__", [](const Owrn& net) {
        return "Owrn(" + std::to_string(net.rows()) + "x" + std::to_string(net.cols()) + ")";
      });

  py::class_<Vehicle>(m, "Vehicle")
      .def(py::init([](const py::object& start, const py::object& speed, PathSeq path) {
             return Vehicle{rationalFromObject(start), rationalFromObject(speed), std::move(path)};
           }),
           py::arg("start_time"), py::arg("speed"), py::arg("path"))
      .def_readwrite("start_time", &Vehicle::start_time)
      .def_readwrite("speed", &Vehicle::speed)
      .def_readwrite("path", &Vehicle::path);

  py::class_<TrafficConfig>(m, "TrafficConfig")
      .def_readonly("network", &TrafficConfig::network)
      .def_readonly("vehicles", &TrafficConfig::vehicles)
      .def("car_count", &TrafficConfig::carCount);

  py::class_<ScheduleEntry>(m, "ScheduleEntry")
      .def_readonly("vertex", &ScheduleEntry::vertex)
      .def_readonly("time", &ScheduleEntry::time)
      .def_readonly("axis", &ScheduleEntry::axis);

  py::class_<BoundaryWitness>(m, "BoundaryWitness")
      .def_readonly("e", &BoundaryWitness::e)
      .def_readonly("f", &BoundaryWitness::f);

  py::class_<CollisionEvent>(m, "CollisionEvent")
      .def_readonly("car_a", &CollisionEvent::car_a)
      .def_readonly("car_b", &CollisionEvent::car_b)
      .def_readonly("vertex", &CollisionEvent::vertex)
      .def_readonly("time", &CollisionEvent::time)
      .def("__repr__", [](const CollisionEvent& e) {
        return "CollisionEvent(" + std::to_string(e.car_a) + ", " + std::to_string(e.car_b) +
               ", v(" + std::to_string(e.vertex.i) + "," + std::to_string(e.vertex.j) +
               "), t=" + e.time.str() + ")";
      });

  py::class_<ConflictGraph>(m, "ConflictGraph")
      .def_readonly("node_count", &ConflictGraph::node_count)
      .def_readonly("edges", &ConflictGraph::edges)
      .def("has_edge", &ConflictGraph::hasEdge);

  py::class_<SubsetSolution>(m, "SubsetSolution")
      .def_readonly("selected", &SubsetSolution::selected)
      .def_readonly("size", &SubsetSolution::size)
      .def_readonly("method", &SubsetSolution::method);

  py::class_<SimpleGraph>(m, "SimpleGraph")
      .def_readonly("n", &SimpleGraph::n)
      .def_readonly("edges", &SimpleGraph::edges)
      .def("has_edge", &SimpleGraph::hasEdge);

  py::class_<ReductionParams>(m, "ReductionParams")
      .def(py::init([](long long delta, const py::object& omega) {
             ReductionParams p;
             p.delta = delta;
             p.omega = rationalFromObject(omega);
             return p;
           }),
           py::arg("delta") = 5, py::arg("omega") = py::int_(1))
      .def_readwrite("delta", &ReductionParams::delta)
      .def_readwrite("omega", &ReductionParams::omega)
      .def("fine", &ReductionParams::fine)
      .def("delay_quantum", &ReductionParams::delayQuantum);

  py::class_<ReductionInstance>(m, "ReductionInstance")
      .def_readonly("input", &ReductionInstance::input)
      .def_readonly("params", &ReductionInstance::params)
      .def_readonly("tc", &ReductionInstance::tc)
      .def_readonly("refined", &ReductionInstance::refined)
      .def_readonly("collision_vertices", &ReductionInstance::collision_vertices)
      .def_readonly("delay_counts", &ReductionInstance::delay_counts);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("passed", &VerificationReport::passed)
      .def_readonly("violations", &VerificationReport::violations)
      .def_readonly("n", &VerificationReport::n)
      .def_readonly("horizontal_roads", &VerificationReport::horizontal_roads)
      .def_readonly("vertical_roads", &VerificationReport::vertical_roads)
      .def_readonly("total_path_vertices", &VerificationReport::total_path_vertices)
      .def_readonly("collision_count", &VerificationReport::collision_count);

  py::class_<TurnPath>(m, "TurnPath")
      .def_readonly("path", &TurnPath::path)
      .def_readonly("length", &TurnPath::length)
      .def_readonly("turns", &TurnPath::turns);

  m.def("validate_owrn", &validateOwrn, py::arg("horizontal"), py::arg("vertical"));
  m.def("has_directed_edge", &hasDirectedEdge, py::arg("net"), py::arg("u"), py::arg("v"));
  m.def("find_broken_edge", &findBrokenEdge, py::arg("net"), py::arg("path"));
  m.def("validate_path", &validatePath, py::arg("net"), py::arg("path"));
  m.def("path_length", &pathLength, py::arg("net"), py::arg("path"));
  m.def("make_traffic_config", &makeTrafficConfig, py::arg("network"), py::arg("vehicles"));
  m.def("arrival_schedule", &arrivalSchedule, py::arg("net"), py::arg("vehicle"));

  m.def("boundary_forms_cycle", &boundaryFormsCycle, py::arg("net"));
  m.def("strongly_connected", &stronglyConnected, py::arg("net"));
  m.def("reach_boundary_from", &reachBoundaryFrom, py::arg("net"), py::arg("v"));
  m.def("reachable_from_boundary", &reachableFromBoundary, py::arg("net"), py::arg("v"));

  m.def("detect_collisions", &detectCollisions, py::arg("tc"));
  m.def("conflict_graph", &conflictGraph, py::arg("tc"));
  m.def("is_collision_free", &isCollisionFree, py::arg("tc"));
  m.def("restrict_to", &restrictTo, py::arg("tc"), py::arg("cars"));

  m.def("brute_force_mis", &bruteForceMIS, py::arg("graph"));
  m.def("max_collision_free_subset", &maxCollisionFreeSubset, py::arg("tc"));
  m.def("exact_max_subset", &exactMaxSubset, py::arg("tc"));
  m.def("is_straight_line_tc", &isStraightLineTC, py::arg("tc"));
  m.def("bipartite_max_subset", &bipartiteMaxSubset, py::arg("tc"));

  m.def("dijkstra_shortest", &dijkstraShortest, py::arg("net"), py::arg("u"), py::arg("v"));
  m.def("turn_bounded_shortest", &turnBoundedShortest, py::arg("net"), py::arg("u"),
        py::arg("v"), py::arg("max_turns") = 4);
  m.def("turn_sequence", &turnSequence, py::arg("net"), py::arg("path"));
  m.def("perimeter", &perimeter, py::arg("net"));

  m.def("make_simple_graph", &makeSimpleGraph, py::arg("n"), py::arg("edges"));
  m.def("complete_graph_tc", &completeGraphTC, py::arg("n"),
        py::arg("params") = ReductionParams{});
  m.def("refine_network", &refineNetwork, py::arg("tc"), py::arg("params"));
  m.def("collision_vertex", &collisionVertex, py::arg("instance"), py::arg("i"), py::arg("j"));
  m.def("insert_delay", &insertDelay, py::arg("net"), py::arg("path"), py::arg("alpha"),
        py::arg("beta"), py::arg("count"), py::arg("fine"));
  m.def("reduce", &reduce, py::arg("graph"), py::arg("params") = ReductionParams{});
  m.def("verify_reduction", &verifyReduction, py::arg("instance"));

  m.def("parse_scenario", &parseScenario, py::arg("text"));
  m.def("write_scenario", &writeScenario, py::arg("tc"));
  m.def("parse_graph", &parseGraph, py::arg("text"));
  m.def("write_graph", &writeGraph, py::arg("graph"));
  m.def("export_dot", py::overload_cast<const ConflictGraph&>(&exportDot), py::arg("graph"));
  m.def("export_dot", py::overload_cast<const Owrn&>(&exportDot), py::arg("net"));
  m.def("events_report", [](const std::vector<CollisionEvent>& e) { return writeReport(e); });
  m.def("solution_report", [](const SubsetSolution& s) { return writeReport(s); });
  m.def("verification_report", [](const VerificationReport& r) { return writeReport(r); });
}
