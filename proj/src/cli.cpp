#include "owrn/cli.hpp"

#include "owrn/connectivity.hpp"
#include "owrn/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace owrn::cli {

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void writeOutput(const std::string& text, const std::string& outPath, std::ostream& out) {
  if (outPath.empty()) {
    out << text;
    return;
  }
  std::ofstream file(outPath, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write file: " + outPath);
  file << text;
}

VertexId parseVertexArg(const std::string& text, const std::string& name) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorCode::ParseError, name + ": expected i,j");
  }
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, name + ": expected i,j with integer indices");
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"One-way road networks: validation, connectivity, collision "
               "simulation, traffic subset solving, graph reduction and "
               "turn-bounded shortest paths"};
  app.require_subcommand(1);

  std::string scenarioPath;
  std::string graphPath;
  std::string outPath;
  std::string omegaText = "1";
  std::string fromText;
  std::string toText;
  long long delta = 5;
  int maxTurns = 4;
  bool asDot = false;
  bool asJson = false;
  bool verify = false;
  enum class SolveMode { Auto, Exact, Bipartite };
  SolveMode solveMode = SolveMode::Auto;

  auto* validateCmd = app.add_subcommand("validate", "Parse and validate a scenario file");
  validateCmd->add_option("file", scenarioPath, "scenario JSON file")->required();

  auto* connectivityCmd =
      app.add_subcommand("connectivity", "Boundary-cycle and strong-connectivity check");
  connectivityCmd->add_option("file", scenarioPath, "scenario JSON file")->required();

  auto* simulateCmd = app.add_subcommand("simulate", "Detect collisions among the vehicles");
  simulateCmd->add_option("file", scenarioPath, "scenario JSON file")->required();
  simulateCmd->add_flag("--json", asJson, "collision report as JSON (default)");
  simulateCmd->add_flag("--dot", asDot, "conflict graph as DOT");

  auto* solveCmd = app.add_subcommand("solve", "Maximum collision-free subset of cars");
  solveCmd->add_option("file", scenarioPath, "scenario JSON file")->required();
  auto* exactFlag = solveCmd->add_flag("--exact", "force the branch-and-bound route");
  auto* bipartiteFlag = solveCmd->add_flag("--bipartite", "force the Konig route");
  solveCmd->add_flag("--auto", "dispatch on path shape (default)");
  exactFlag->excludes(bipartiteFlag);

  auto* reduceCmd =
      app.add_subcommand("reduce", "Build a traffic configuration whose conflict graph "
                                   "equals a given graph");
  reduceCmd->add_option("--graph", graphPath, "graph JSON file")->required();
  reduceCmd->add_option("--delta", delta, "coarse road spacing (multiple of 5)");
  reduceCmd->add_option("--omega", omegaText, "vehicle speed, integer or p/q");
  reduceCmd->add_flag("--verify", verify, "certify the instance and print the report");
  reduceCmd->add_option("--out", outPath, "write the scenario to this file");

  auto* shortestCmd = app.add_subcommand("shortest", "Turn-bounded shortest path");
  shortestCmd->add_option("file", scenarioPath, "scenario JSON file")->required();
  shortestCmd->add_option("--from", fromText, "source vertex i,j")->required();
  shortestCmd->add_option("--to", toText, "target vertex i,j")->required();
  shortestCmd->add_option("--max-turns", maxTurns, "turn budget (default 4)");

  auto* exportCmd = app.add_subcommand("export-dot", "Road network as DOT");
  exportCmd->add_option("file", scenarioPath, "scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (validateCmd->parsed()) {
      const TrafficConfig tc = parseScenario(readFile(scenarioPath));
      nlohmann::ordered_json doc;
      doc["valid"] = true;
      doc["horizontal_roads"] = tc.network.rows();
      doc["vertical_roads"] = tc.network.cols();
      doc["vehicles"] = tc.carCount();
      out << doc.dump(2) << "\n";
      return 0;
    }
    if (connectivityCmd->parsed()) {
      const TrafficConfig tc = parseScenario(readFile(scenarioPath));
      const bool cycle = boundaryFormsCycle(tc.network);
      const bool strong = stronglyConnected(tc.network);
      nlohmann::ordered_json doc;
      doc["boundary_cycle"] = cycle;
      doc["strongly_connected"] = strong;
      out << doc.dump(2) << "\n";
      return strong ? 0 : 2;
    }
    if (simulateCmd->parsed()) {
      const TrafficConfig tc = parseScenario(readFile(scenarioPath));
      if (asDot) {
        out << exportDot(conflictGraph(tc));
      } else {
        out << writeReport(detectCollisions(tc));
      }
      return 0;
    }
    if (solveCmd->parsed()) {
      const TrafficConfig tc = parseScenario(readFile(scenarioPath));
      if (exactFlag->count() > 0) {
        solveMode = SolveMode::Exact;
      } else if (bipartiteFlag->count() > 0) {
        solveMode = SolveMode::Bipartite;
      }
      SubsetSolution sol;
      switch (solveMode) {
        case SolveMode::Exact: sol = exactMaxSubset(tc); break;
        case SolveMode::Bipartite: sol = bipartiteMaxSubset(tc); break;
        case SolveMode::Auto: sol = maxCollisionFreeSubset(tc); break;
      }
      out << writeReport(sol);
      return 0;
    }
    if (reduceCmd->parsed()) {
      const SimpleGraph g = parseGraph(readFile(graphPath));
      ReductionParams params;
      params.delta = delta;
      params.omega = Rational::parse(omegaText);
      const ReductionInstance inst = reduce(g, params);
      const std::string scenario = writeScenario(inst.tc);
      if (!outPath.empty()) writeOutput(scenario, outPath, out);
      if (verify) {
        const VerificationReport report = verifyReduction(inst);
        out << writeReport(report);
        return report.passed ? 0 : 2;
      }
      if (outPath.empty()) out << scenario;
      return 0;
    }
    if (shortestCmd->parsed()) {
      const TrafficConfig tc = parseScenario(readFile(scenarioPath));
      const VertexId from = parseVertexArg(fromText, "--from");
      const VertexId to = parseVertexArg(toText, "--to");
      const auto result = turnBoundedShortest(tc.network, from, to, maxTurns);
      nlohmann::ordered_json doc;
      doc["found"] = result.has_value();
      doc["max_turns"] = maxTurns;
      if (result) {
        doc["length"] = result->length;
        nlohmann::ordered_json turns = nlohmann::ordered_json::array();
        for (const Turn t : result->turns) turns.push_back(turnName(t));
        doc["turns"] = std::move(turns);
        nlohmann::ordered_json path = nlohmann::ordered_json::array();
        for (const VertexId v : result->path) path.push_back({v.i, v.j});
        doc["path"] = std::move(path);
      }
      out << doc.dump(2) << "\n";
      return result ? 0 : 2;
    }
    if (exportCmd->parsed()) {
      const TrafficConfig tc = parseScenario(readFile(scenarioPath));
      out << exportDot(tc.network);
      return 0;
    }
  } catch (const Error& e) {
    err << "error [" << errorCodeName(e.code()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command\n";
  return 1;
}

}  // namespace owrn::cli
