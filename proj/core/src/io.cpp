#include "tcgre/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace tcgre {
namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("json: " + what);
}

// Wraps json access so errors carry the field being read instead of a bare
// type mismatch from the json library.
template <typename T>
T field(const ordered_json& j, const char* name) {
  if (!j.contains(name)) fail(std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(std::string("field '") + name + "' has the wrong type");
  }
}

void normalize(NodeId& a, NodeId& b) {
  if (a > b) std::swap(a, b);
}

}  // namespace

ProblemInstance load_instance(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("instance json: parse error: ") + e.what());
  }
  if (!j.is_object()) fail("top level must be an object");

  ProblemInstance inst;
  inst.graph.node_count = field<int>(j, "nodes");
  inst.graph.coord_cost = field<double>(j, "coord_cost");

  for (const auto& ej : field<std::vector<ordered_json>>(j, "edges")) {
    if (!ej.is_array() || ej.size() != 3) fail("each edge must be [u, v, cost]");
    Edge e;
    try {
      e.u = ej.at(0).get<NodeId>();
      e.v = ej.at(1).get<NodeId>();
      e.cost = ej.at(2).get<double>();
    } catch (const nlohmann::json::exception&) {
      fail("each edge must be [u, v, cost] with numeric entries");
    }
    normalize(e.u, e.v);
    inst.graph.edges.push_back(e);
  }

  for (const auto& rj : field<std::vector<ordered_json>>(j, "risky")) {
    if (!rj.is_object()) fail("each risky entry must be an object");
    RiskySpec r;
    auto ends = field<std::vector<NodeId>>(rj, "edge");
    if (ends.size() != 2) fail("risky field 'edge' must be [u, v]");
    r.u = ends[0];
    r.v = ends[1];
    normalize(r.u, r.v);
    r.reduced_cost = field<double>(rj, "reduced");
    r.supports = field<std::vector<NodeId>>(rj, "support");
    inst.graph.risky.push_back(std::move(r));
  }

  for (const auto& bj : field<std::vector<ordered_json>>(j, "robots")) {
    if (!bj.is_object()) fail("each robot must be an object");
    inst.starts.push_back(field<NodeId>(bj, "start"));
    inst.goals.push_back(field<NodeId>(bj, "goal"));
  }

  if (j.contains("horizon") && !j.at("horizon").is_null())
    inst.horizon = field<int>(j, "horizon");

  ValidationReport report = validate_instance(inst);
  if (!report.ok()) fail("validation failed: " + report.violations.front());
  return inst;
}

ProblemInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_instance(buf.str());
}

std::string serialize_instance(const ProblemInstance& inst) {
  ordered_json j;
  j["nodes"] = inst.graph.node_count;
  ordered_json edges = ordered_json::array();
  for (const Edge& e : inst.graph.edges) edges.push_back({e.u, e.v, e.cost});
  j["edges"] = std::move(edges);
  ordered_json risky = ordered_json::array();
  for (const RiskySpec& r : inst.graph.risky) {
    ordered_json rj;
    rj["edge"] = {r.u, r.v};
    rj["reduced"] = r.reduced_cost;
    rj["support"] = r.supports;
    risky.push_back(std::move(rj));
  }
  j["risky"] = std::move(risky);
  j["coord_cost"] = inst.graph.coord_cost;
  ordered_json robots = ordered_json::array();
  for (int n = 0; n < inst.robot_count(); ++n)
    robots.push_back({{"start", inst.starts[n]}, {"goal", inst.goals[n]}});
  j["robots"] = std::move(robots);
  if (inst.horizon.has_value()) j["horizon"] = *inst.horizon;
  return j.dump(2) + "\n";
}

Solution load_solution(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("solution json: parse error: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("solution json: top level must be an object");

  Solution sol;
  for (const auto& pj : field<std::vector<ordered_json>>(j, "paths")) {
    std::vector<PathEntry> path;
    for (const auto& entry : pj) {
      PathEntry pe;
      pe.node = field<NodeId>(entry, "node");
      pe.cost_to_date = field<double>(entry, "cost");
      path.push_back(pe);
    }
    sol.paths.push_back(std::move(path));
  }
  for (const auto& ej : field<std::vector<ordered_json>>(j, "events")) {
    CoordinationEvent ev;
    ev.time_order = field<int>(ej, "t");
    ev.receiver = field<int>(ej, "receiver");
    ev.supporter = field<int>(ej, "supporter");
    auto ends = field<std::vector<NodeId>>(ej, "edge");
    if (ends.size() != 2) fail("event field 'edge' must be [u, v]");
    ev.edge_from = ends[0];
    ev.edge_to = ends[1];
    ev.support_node = field<NodeId>(ej, "support");
    sol.events.push_back(ev);
  }
  sol.robot_costs = field<std::vector<double>>(j, "robot_costs");
  if (j.contains("total_cost") && !j.at("total_cost").is_null())
    sol.total_cost = field<double>(j, "total_cost");
  if (!j.contains("stats") || !j.at("stats").is_object())
    throw std::runtime_error("solution json: missing 'stats' object");
  const auto& sj = j.at("stats");
  sol.stats.visited_joint_states = field<std::int64_t>(sj, "visited");
  sol.stats.expanded_joint_edges = field<std::int64_t>(sj, "expanded");
  sol.stats.wall_time_seconds = field<double>(sj, "wall_time");
  sol.stats.timed_out = field<bool>(sj, "timed_out");
  return sol;
}

std::string serialize_solution(const Solution& sol) {
  ordered_json j;
  ordered_json paths = ordered_json::array();
  for (const auto& path : sol.paths) {
    ordered_json pj = ordered_json::array();
    for (const PathEntry& pe : path) pj.push_back({{"node", pe.node}, {"cost", pe.cost_to_date}});
    paths.push_back(std::move(pj));
  }
  j["paths"] = std::move(paths);
  ordered_json events = ordered_json::array();
  for (const CoordinationEvent& ev : sol.events) {
    ordered_json ej;
    ej["t"] = ev.time_order;
    ej["receiver"] = ev.receiver;
    ej["supporter"] = ev.supporter;
    ej["edge"] = {ev.edge_from, ev.edge_to};
    ej["support"] = ev.support_node;
    events.push_back(std::move(ej));
  }
  j["events"] = std::move(events);
  j["robot_costs"] = sol.robot_costs;
  if (sol.total_cost.has_value())
    j["total_cost"] = *sol.total_cost;
  else
    j["total_cost"] = nullptr;
  j["stats"] = {{"visited", sol.stats.visited_joint_states},
                {"expanded", sol.stats.expanded_joint_edges},
                {"wall_time", sol.stats.wall_time_seconds},
                {"timed_out", sol.stats.timed_out}};
  return j.dump(2) + "\n";
}

}  // namespace tcgre
